#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holant/barvinok.hpp"
#include "holant/graph.hpp"
#include "holant/poly.hpp"

namespace holant {

/// A graph polynomial of exponential type, given by the graph parameter chi
/// with p_chi(G)(z) = sum_k chi_k(G) z^k.
struct ExpTypeSpec {
    std::function<cplx(const Multigraph &)> chi;
    std::string name;
    /// Bound c on the root moduli of p_chi(G); required by eval_exp_type.
    std::optional<double> root_radius;
    std::optional<double> R_delta;
    /// root_radius came from estimate_root_radius rather than a proof.
    bool heuristic_radius = false;
};

/// Connected spanning subgraph generating function: sum over A with (V, A)
/// connected of v^|A|.
cplx chi_tutte(const Multigraph &g, cplx v);

/// chi = chi_tutte(., v); p_chi(G)(q) = Z(G)(q, v).
ExpTypeSpec tutte_spec(cplx v);
/// tutte_spec(-1).
ExpTypeSpec chromatic_spec();
/// "tutte:v=<re>,<im>" or "chromatic".
ExpTypeSpec parse_exptype_spec(const std::string &text);

/// Z(G)(q, v) = sum_{A subset E} q^{k(A)} v^{|A|}.
cplx tutte_direct(const Multigraph &g, cplx q, cplx v);

/// chi_0..chi_|V| (chi_0 = 0 unless the graph is empty).
std::vector<cplx> chi_k_coefficients(const Multigraph &g, const ExpTypeSpec &spec);

/// p_chi(G) as a polynomial.
ComplexPoly exp_type_poly(const Multigraph &g, const ExpTypeSpec &spec);

/// Visits every restricted growth string of length n with exactly `blocks`
/// blocks (any count when blocks < 0) whose blocks all have at least
/// `min_block` elements, in lexicographic order.
void for_each_set_partition(int n, int blocks, int min_block,
                            const std::function<void(const std::vector<int> &)> &visit);

/// d^m qhat/dz^m at 0 for qhat(z) = z^|V| p_chi(G)(1/z): m! times the sum over
/// partitions of V into |V| - m blocks of prod chi(G[block]). Enumerates the
/// support of the non-singleton blocks (at most 2m vertices).
cplx qhat_derivative(const Multigraph &g, const ExpTypeSpec &spec, int m);

/// Same value by filtering all set partitions of V by block count.
cplx qhat_derivative_bruteforce(const Multigraph &g, const ExpTypeSpec &spec, int m);

/// Certified evaluation of p_chi(G)(x) for |x| > c = spec.root_radius.
ApproxCertificate eval_exp_type(const Multigraph &g, const ExpTypeSpec &spec, cplx x, double eps,
                                ApproxMode mode);

struct RootRadiusEstimate {
    double radius = 0.0;
    int graphs_used = 0;
    bool heuristic = true;
};

/// 1.5 times the largest root modulus of p_chi over the sample graphs with
/// maximum degree at most max_degree. Heuristic.
RootRadiusEstimate estimate_root_radius(const ExpTypeSpec &spec, int max_degree,
                                        const std::vector<Multigraph> &samples);

}  // namespace holant
