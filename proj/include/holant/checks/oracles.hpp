#pragma once

// Independent reference computations used only for cross-checking.

#include <cstdint>
#include <vector>

#include "holant/graph.hpp"
#include "holant/models.hpp"
#include "holant/rng.hpp"

namespace holant::checks {

/// Number of matchings (edge sets with no shared endpoint; loops never
/// qualify), by include/exclude recursion over the edges.
std::uint64_t count_matchings(const Multigraph &g);

/// Number of proper vertex colorings with q colors, by backtracking.
std::uint64_t count_proper_colorings(const Multigraph &g, int q);

/// Random graph with n vertices, at most max_edges edges and maximum degree
/// at most max_degree. Simple unless allow_multi (then loops and parallel
/// edges may appear).
Multigraph random_graph(Rng &rng, int n, int max_edges, int max_degree, bool allow_multi = false);

/// h(alpha) = 1 + u with u uniform in the disk of radius `spread`, for
/// |alpha| <= degree_bound.
EdgeColoringModel random_model(Rng &rng, int k, double spread, int degree_bound);

/// Generic complex tensors at every vertex, entries 1 + u, |u| < spread.
TensorAssignment random_tensors(Rng &rng, const Multigraph &g, int k, double spread);

/// |a - b| / max(|a|, |b|, tiny).
double relative_error(cplx a, cplx b);

}  // namespace holant::checks
