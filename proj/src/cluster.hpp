#pragma once

// Connected-cluster form of ln(q(z) / k^|E|).

#include <vector>

#include "holant/graph.hpp"
#include "holant/models.hpp"

namespace holant::detail {

/// Coefficients L_0..L_N of ln(q(z) / k^|E|) where q(z) = p(G)(I + z D) and
/// D holds the tensors h - I. L_0 = 0.
std::vector<cplx> log_series_by_clusters(const Multigraph &g, const TensorAssignment &D, int N);

/// Every connected vertex set of size 1..N (vertices ascending), each once.
std::vector<std::vector<int>> connected_sets(const Multigraph &g, int N);

}  // namespace holant::detail
