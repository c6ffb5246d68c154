#pragma once

// Shared contraction core: a tensor network whose edges may have one open
// end (a half-edge leaving the network) and whose edges may be pinned to a
// fixed color.

#include <cstdint>
#include <vector>

#include "holant/models.hpp"

namespace holant::detail {

struct OpenNetwork {
    int k = 2;
    /// Endpoints are local vertex ids; -1 marks an open end.
    std::vector<std::pair<int, int>> edges;
    /// Color per edge, -1 when free.
    std::vector<int> fixed;
    std::vector<const VertexTensor *> tensors;
};

/// k^(number of free edges), saturating at UINT64_MAX.
std::uint64_t coloring_count(const OpenNetwork &net);

/// Sum over colorings of the free edges of the product of the vertex
/// tensors. Tensor v must have order equal to the number of edge ends at v.
/// Colorings are visited lexicographically (edge 0 most significant); the
/// work may be split across threads without changing the result.
cplx contract(const OpenNetwork &net, bool allow_parallel = true);

/// Network of a whole graph with the given tensors.
OpenNetwork whole_graph(const Multigraph &g, const TensorAssignment &t);

/// Saturating a*b for budget arithmetic.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, int exp);

}  // namespace holant::detail
