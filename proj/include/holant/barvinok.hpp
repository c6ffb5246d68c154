#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "holant/graph.hpp"
#include "holant/models.hpp"
#include "holant/rng.hpp"

namespace holant {

struct ZeroFreeConstants {
    double theta_star;  ///< root of 2/theta = tan(theta/2) in (0, 2 pi/3)
    double x_star;      ///< theta_star * cos(theta_star / 2)

    /// x_star / (1 + x_star / (2d)).
    double beta_star(int d) const;
};

ZeroFreeConstants zero_free_constants();

/// r = sup_{|alpha| <= max_degree} |h(alpha) - 1|, threshold =
/// beta*(max_degree+1) / (2(max_degree+1)) and M = threshold / r
/// (infinite when r = 0).
struct RadiusInfo {
    double r = 0.0;
    double threshold = 0.0;
    double M = std::numeric_limits<double>::infinity();
};

RadiusInfo radius_info(const EdgeColoringModel &h, int max_degree);
/// Same with r taken over the tensors of the assignment.
RadiusInfo radius_info(const TensorAssignment &h, int max_degree);

/// M from radius_info; throws OutsideRegionError when M <= 1.
double certified_radius(const EdgeColoringModel &h, int max_degree);

/// How the derivatives of q(z) = p(G)(I + z(h - I)) at 0 are computed.
///  Subsets:  the sum over vertex subsets U with |U| = m, coloring E(U).
///  Clusters: the same quantity regrouped over connected vertex sets of size
///            at most m (exact, but linear in |V| for bounded degree).
///  Auto:     Subsets when its term count fits the budget, else Clusters.
enum class DerivativeMethod { Auto, Subsets, Clusters };

std::string to_string(DerivativeMethod m);

/// d^m q / dz^m at 0; zero for m > |V|.
cplx q_derivative(const Multigraph &g, const EdgeColoringModel &h, int m,
                  DerivativeMethod method = DerivativeMethod::Auto);

/// q^(0..n)(0) divided by k^|E|.
std::vector<cplx> normalized_q_derivatives(const Multigraph &g, const TensorAssignment &h, int n,
                                           DerivativeMethod method = DerivativeMethod::Auto);

/// Subset-route work estimate for derivative orders 0..n (saturating).
std::uint64_t subsets_cost(const Multigraph &g, int k, int n);

/// f^(0..n)(0) for f = ln p.
struct LogDerivatives {
    std::vector<cplx> values;

    /// T_n(f)(t) = sum_{m <= n} t^m f^(m)(0) / m!.
    cplx taylor(cplx t, int n) const;
};

/// Solves p^(m) = sum_{j<m} C(m-1, j) p^(j) f^(m-j) for f^(1..n); f^(0) is the
/// principal log of p(0). Throws PreconditionError when p(0) = 0.
LogDerivatives log_derivatives_from_p(const std::vector<cplx> &p_derivs, int n);

/// Inverse of the above: p^(0..n) from f^(0..n).
std::vector<cplx> p_derivatives_from_log(const LogDerivatives &f, int n);

enum class ApproxMode { Multiplicative, Additive };

std::string to_string(ApproxMode m);

/// d q0^(n+1) / ((n+1)(1 - q0)).
double taylor_bound(int d, double q0, int n);

/// Smallest n with taylor_bound <= eps (multiplicative) or <= d eps
/// (additive). q0 = 0 gives n = 0.
int taylor_order(int d, double q0, double eps, ApproxMode mode);

struct ApproxCertificate {
    /// Multiplicative: exp(T_n(f)(1)), an approximation of p. Additive:
    /// Re T_n(f)(1), an approximation of ln|p| (imaginary part zero).
    cplx value;
    /// T_n(f)(1) itself, an approximation of ln p.
    cplx log_value;
    double M = 0.0;
    double q0 = 0.0;
    int n = 0;
    /// Proven bound on |T_n(f)(1) - ln p(1)|.
    double bound = 0.0;
    ApproxMode mode = ApproxMode::Multiplicative;
    double r = 0.0;
    int degree = 0;
    DerivativeMethod method = DerivativeMethod::Auto;
    /// Set when M comes from an estimated (not proven) root radius.
    bool heuristic_radius = false;
};

/// Certified approximation of p(G)(h) at t = 1. Throws OutsideRegionError
/// when the certified radius is at most 1.
ApproxCertificate approx_partition(const Multigraph &g, const EdgeColoringModel &h, double eps,
                                   ApproxMode mode,
                                   DerivativeMethod method = DerivativeMethod::Auto);
ApproxCertificate approx_partition(const Multigraph &g, const TensorAssignment &h, double eps,
                                   ApproxMode mode,
                                   DerivativeMethod method = DerivativeMethod::Auto);

/// (cos(theta/2) eta)^|V| k^|E|; validates params against Delta(g).
double magnitude_lower_bound(const Multigraph &g, const RegionParams &params, int k);

struct ZeroFreeReport {
    int samples = 0;
    double bound = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    int zero_violations = 0;
    int bound_violations = 0;
    /// Samples rejected by the membership predicate (always 0 for the
    /// built-in sampler; counted rather than assumed).
    int membership_failures = 0;
};

/// Draws `samples` tensor assignments in S_G(delta, eta) and evaluates each
/// exactly. Per vertex, a center of modulus in [eta + delta/2, eta + 3 delta/2]
/// with random phase; each value is the center plus a point of the open disk
/// of radius delta/2.
ZeroFreeReport verify_zero_free(const Multigraph &g, const RegionParams &params, int k,
                                int samples, std::uint64_t seed);

/// One random member of S_G(delta, eta), as used by verify_zero_free.
TensorAssignment sample_region(const Multigraph &g, const RegionParams &params, int k,
                               Rng &rng);

}  // namespace holant
