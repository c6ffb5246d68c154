#pragma once

#include <cstdint>
#include <vector>

#include "holant/graph.hpp"
#include "holant/models.hpp"
#include "holant/poly.hpp"

namespace holant {

/// Maximum number of colorings (or subset-coloring terms) any single
/// enumeration may visit. Defaults to 1e8, or HOLANT_BUDGET when set.
std::uint64_t budget();
void set_budget(std::uint64_t terms);

/// p(G)(h): sum over all k^|E| edge colorings of prod_v h(colors at v).
/// Throws BudgetExceeded when k^|E| > budget().
cplx exact_partition(const Multigraph &g, const EdgeColoringModel &h);

/// Contraction of the network with tensor h^v at vertex v.
cplx contract_network(const Multigraph &g, const TensorAssignment &t);

/// An edge subset F with a color for each edge of F.
struct RestrictedSpec {
    std::vector<int> F;
    std::vector<int> phi;
};

/// Sum over the colorings that agree with phi on F.
cplx restricted_partition(const Multigraph &g, const TensorAssignment &t,
                          const RestrictedSpec &r);

/// Direct vertex-coloring sum: sum over c : V -> [n] of prod_v a_{c(v)}
/// prod_{uv in E} B_{c(u) c(v)}.
cplx vertex_partition(const Multigraph &g, const VertexModel &model);

/// The tensors I + z(h - I) at each vertex.
TensorAssignment interpolate_tensors(const TensorAssignment &h, cplx z);

/// q(z) = p(G)(I + z(h - I)) recovered from its values at z = 0..|V|.
ComplexPoly exact_poly_by_interpolation(const Multigraph &g, const EdgeColoringModel &h);
ComplexPoly exact_poly_by_interpolation(const Multigraph &g, const TensorAssignment &h);

}  // namespace holant
