#pragma once

#include <vector>

#include "holant/graph.hpp"

namespace holant::checks {

/// One representative of every isomorphism class of simple graphs on
/// exactly n vertices (n <= 8), built by vertex augmentation with
/// canonical-form deduplication.
std::vector<Multigraph> simple_graphs(int n);

/// simple_graphs(1..max_n) concatenated.
std::vector<Multigraph> simple_graphs_up_to(int max_n);

/// Those representatives that are connected.
std::vector<Multigraph> connected_simple_graphs_up_to(int max_n);

bool is_connected(const Multigraph &g);

}  // namespace holant::checks
