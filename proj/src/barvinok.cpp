#include "holant/barvinok.hpp"

#include <cmath>
#include <numbers>

#include "cluster.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/parallel.hpp"
#include "network.hpp"

namespace holant {

double ZeroFreeConstants::beta_star(int d) const
{
    if (d < 1) {
        throw PreconditionError("beta_star needs d >= 1");
    }
    return x_star / (1.0 + x_star / (2.0 * d));
}

ZeroFreeConstants zero_free_constants()
{
    // g(theta) = tan(theta/2) - 2/theta increases from -inf to +inf on the
    // interval, so bisection finds the unique root.
    auto g = [](double t) { return std::tan(t / 2.0) - 2.0 / t; };
    double lo = 1e-6, hi = 2.0 * std::numbers::pi / 3.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; i++) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    ZeroFreeConstants c{};
    c.theta_star = 0.5 * (lo + hi);
    c.x_star = c.theta_star * std::cos(c.theta_star / 2.0);
    return c;
}

namespace {

RadiusInfo finish_radius(double r, int max_degree)
{
    RadiusInfo info;
    info.r = r;
    info.threshold = zero_free_constants().beta_star(max_degree + 1) / (2.0 * (max_degree + 1));
    info.M = r == 0.0 ? std::numeric_limits<double>::infinity() : info.threshold / r;
    return info;
}

void require_inside(const RadiusInfo &info)
{
    if (!(info.M > 1.0)) {
        throw OutsideRegionError("model deviation r = " + std::to_string(info.r) +
                                 " is not below the certified threshold " +
                                 std::to_string(info.threshold) + " (radius M = " +
                                 std::to_string(info.M) + ")");
    }
}

TensorAssignment minus_identity(const TensorAssignment &h)
{
    TensorAssignment D = h;
    for (int v = 0; v < D.size(); v++) {
        for (std::size_t i = 0; i < D[v].indexer().size(); i++) {
            D[v].raw(i) -= 1.0;
        }
    }
    return D;
}

// k^-|E(U)| times the sum over colorings of E(U) of prod_{v in U} D^v.
cplx subset_term(const Multigraph &g, const TensorAssignment &D, const std::vector<int> &U,
                 std::vector<int> &local)
{
    for (std::size_t i = 0; i < U.size(); i++) {
        local[U[i]] = static_cast<int>(i);
    }
    detail::OpenNetwork net;
    net.k = D.colors();
    for (int e : edges_touching(g, U)) {
        const Edge &edge = g.edge(e);
        net.edges.emplace_back(local[edge.u], local[edge.v]);
    }
    net.fixed.assign(net.edges.size(), -1);
    for (int v : U) {
        net.tensors.push_back(&D[v]);
    }
    for (int v : U) {
        local[v] = -1;
    }
    const cplx value = detail::contract(net, false);
    return value * std::pow(static_cast<double>(D.colors()), -static_cast<double>(net.edges.size()));
}

// Advances a strictly increasing tuple over [0, n) that keeps U[0] fixed;
// false when exhausted.
bool next_tail(std::vector<int> &U, int n)
{
    int i = static_cast<int>(U.size()) - 1;
    while (i >= 1 && U[i] == n - static_cast<int>(U.size()) + i) {
        i--;
    }
    if (i < 1) {
        return false;
    }
    U[i]++;
    for (std::size_t j = i + 1; j < U.size(); j++) {
        U[j] = U[j - 1] + 1;
    }
    return true;
}

// m! * sum_{|U| = m} k^-|E(U)| sum_phi prod D^v, lexicographic in U and
// grouped by the leading vertex.
cplx subset_derivative(const Multigraph &g, const TensorAssignment &D, int m)
{
    const int n = g.num_vertices();
    if (m == 0) {
        return 1.0;
    }
    const std::vector<cplx> partial = parallel_map(n - m + 1, [&](std::size_t lead) {
        std::vector<int> local(n, -1);
        std::vector<int> U(m);
        for (int j = 0; j < m; j++) {
            U[j] = static_cast<int>(lead) + j;
        }
        cplx acc = 0.0;
        do {
            acc += subset_term(g, D, U, local);
        } while (next_tail(U, n));
        return acc;
    });
    cplx total = 0.0;
    for (const cplx &p : partial) {
        total += p;
    }
    return factorial(m) * total;
}

std::uint64_t subset_cost_for_order(const Multigraph &g, int k, int m)
{
    using detail::sat_mul;
    using detail::sat_pow;
    const int n = g.num_vertices();
    if (m == 0) {
        return 1;
    }
    const double subsets = binomial(n, m);
    if (subsets > static_cast<double>(budget())) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    const std::uint64_t crude =
        sat_mul(static_cast<std::uint64_t>(subsets),
                sat_pow(k, std::min<long>(g.num_edges(), static_cast<long>(m) * g.max_degree())));
    if (crude <= budget()) {
        return crude;
    }
    std::uint64_t cost = 0;
    std::vector<int> U(m);
    for (int lead = 0; lead + m <= n; lead++) {
        for (int j = 0; j < m; j++) {
            U[j] = lead + j;
        }
        do {
            cost += sat_pow(k, static_cast<int>(edges_touching(g, U).size()));
            if (cost > budget()) {
                return std::numeric_limits<std::uint64_t>::max();
            }
        } while (next_tail(U, n));
    }
    return cost;
}

}  // namespace

RadiusInfo radius_info(const EdgeColoringModel &h, int max_degree)
{
    double r = 0.0;
    for (const Alpha &alpha : multisets_up_to(h.colors(), max_degree)) {
        r = std::max(r, std::abs(h(alpha) - 1.0));
    }
    return finish_radius(r, max_degree);
}

RadiusInfo radius_info(const TensorAssignment &h, int max_degree)
{
    return finish_radius(h.deviation_from_ones(), max_degree);
}

double certified_radius(const EdgeColoringModel &h, int max_degree)
{
    const RadiusInfo info = radius_info(h, max_degree);
    require_inside(info);
    return info.M;
}

std::string to_string(DerivativeMethod m)
{
    switch (m) {
    case DerivativeMethod::Auto: return "auto";
    case DerivativeMethod::Subsets: return "subsets";
    case DerivativeMethod::Clusters: return "clusters";
    }
    return "?";
}

std::string to_string(ApproxMode m)
{
    return m == ApproxMode::Multiplicative ? "mult" : "add";
}

std::uint64_t subsets_cost(const Multigraph &g, int k, int n)
{
    std::uint64_t cost = 0;
    for (int m = 0; m <= std::min(n, g.num_vertices()); m++) {
        const std::uint64_t c = subset_cost_for_order(g, k, m);
        if (c == std::numeric_limits<std::uint64_t>::max()) {
            return c;
        }
        cost += c;
        if (cost > budget()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return cost;
}

namespace {

DerivativeMethod resolve(const Multigraph &g, int k, int n, DerivativeMethod method)
{
    if (method == DerivativeMethod::Auto) {
        return subsets_cost(g, k, n) <= budget() ? DerivativeMethod::Subsets
                                                  : DerivativeMethod::Clusters;
    }
    if (method == DerivativeMethod::Subsets && subsets_cost(g, k, n) > budget()) {
        throw BudgetExceeded("subset enumeration for derivative order " + std::to_string(n) +
                             " exceeds the budget of " + std::to_string(budget()) + " terms");
    }
    return method;
}

std::vector<cplx> normalized_derivatives(const Multigraph &g, const TensorAssignment &h, int n,
                                         DerivativeMethod method)
{
    h.check_against(g);
    if (n < 0) {
        throw PreconditionError("derivative order must be >= 0");
    }
    std::vector<cplx> out(n + 1, cplx(0.0));
    const int top = std::min(n, g.num_vertices());
    const TensorAssignment D = minus_identity(h);
    if (resolve(g, h.colors(), top, method) == DerivativeMethod::Subsets) {
        for (int m = 0; m <= top; m++) {
            out[m] = subset_derivative(g, D, m);
        }
        return out;
    }
    const std::vector<cplx> L = detail::log_series_by_clusters(g, D, top);
    std::vector<cplx> p(top + 1, cplx(0.0));
    p[0] = 1.0;
    for (int m = 1; m <= top; m++) {
        cplx acc = 0.0;
        for (int j = 1; j <= m; j++) {
            acc += static_cast<double>(j) * L[j] * p[m - j];
        }
        p[m] = acc / static_cast<double>(m);
    }
    for (int m = 0; m <= top; m++) {
        out[m] = factorial(m) * p[m];
    }
    return out;
}

}  // namespace

std::vector<cplx> normalized_q_derivatives(const Multigraph &g, const TensorAssignment &h, int n,
                                           DerivativeMethod method)
{
    return normalized_derivatives(g, h, n, method);
}

cplx q_derivative(const Multigraph &g, const EdgeColoringModel &h, int m, DerivativeMethod method)
{
    if (m < 0) {
        throw PreconditionError("derivative order must be >= 0");
    }
    if (m > g.num_vertices()) {
        return 0.0;
    }
    const TensorAssignment t = TensorAssignment::from_model(g, h);
    cplx value;
    if (method == DerivativeMethod::Clusters ||
        (method == DerivativeMethod::Auto && subset_cost_for_order(g, h.colors(), m) > budget())) {
        value = normalized_derivatives(g, t, m, DerivativeMethod::Clusters)[m];
    } else {
        if (subset_cost_for_order(g, h.colors(), m) > budget()) {
            throw BudgetExceeded("subset enumeration for derivative order " + std::to_string(m) +
                                 " exceeds the budget of " + std::to_string(budget()) + " terms");
        }
        value = subset_derivative(g, minus_identity(t), m);
    }
    return value * std::pow(static_cast<double>(h.colors()), g.num_edges());
}

cplx LogDerivatives::taylor(cplx t, int n) const
{
    cplx acc = 0.0;
    cplx power = 1.0;
    for (int m = 0; m <= n && m < static_cast<int>(values.size()); m++) {
        acc += power * values[m] / factorial(m);
        power *= t;
    }
    return acc;
}

LogDerivatives log_derivatives_from_p(const std::vector<cplx> &p, int n)
{
    if (p.empty() || p[0] == cplx(0.0)) {
        throw PreconditionError("p(0) = 0: the log-derivative system is degenerate");
    }
    if (static_cast<int>(p.size()) <= n) {
        throw PreconditionError("need p-derivatives up to order " + std::to_string(n));
    }
    LogDerivatives f;
    f.values.assign(n + 1, cplx(0.0));
    f.values[0] = std::log(p[0]);
    for (int m = 1; m <= n; m++) {
        cplx acc = p[m];
        for (int j = 1; j < m; j++) {
            acc -= binomial(m - 1, j) * p[j] * f.values[m - j];
        }
        f.values[m] = acc / p[0];
    }
    return f;
}

std::vector<cplx> p_derivatives_from_log(const LogDerivatives &f, int n)
{
    std::vector<cplx> p(n + 1, cplx(0.0));
    p[0] = std::exp(f.values.at(0));
    for (int m = 1; m <= n; m++) {
        cplx acc = 0.0;
        for (int j = 0; j < m; j++) {
            acc += binomial(m - 1, j) * p[j] * f.values.at(m - j);
        }
        p[m] = acc;
    }
    return p;
}

double taylor_bound(int d, double q0, int n)
{
    return d * std::pow(q0, n + 1) / ((n + 1) * (1.0 - q0));
}

int taylor_order(int d, double q0, double eps, ApproxMode mode)
{
    if (!(q0 >= 0.0 && q0 < 1.0) || !(eps > 0.0)) {
        throw PreconditionError("taylor_order needs 0 <= q0 < 1 and eps > 0");
    }
    const double target = mode == ApproxMode::Multiplicative ? eps : d * eps;
    int n = 0;
    while (taylor_bound(d, q0, n) > target) {
        n++;
    }
    return n;
}

ApproxCertificate approx_partition(const Multigraph &g, const EdgeColoringModel &h, double eps,
                                   ApproxMode mode, DerivativeMethod method)
{
    return approx_partition(g, TensorAssignment::from_model(g, h), eps, mode, method);
}

ApproxCertificate approx_partition(const Multigraph &g, const TensorAssignment &h, double eps,
                                   ApproxMode mode, DerivativeMethod method)
{
    h.check_against(g);
    const RadiusInfo info = radius_info(h, g.max_degree());
    require_inside(info);

    ApproxCertificate cert;
    cert.mode = mode;
    cert.M = info.M;
    cert.r = info.r;
    cert.degree = g.num_vertices();
    cert.q0 = std::isinf(info.M) ? 0.0 : 1.0 / info.M;
    cert.n = taylor_order(cert.degree, cert.q0, eps, mode);
    cert.bound = taylor_bound(cert.degree, cert.q0, cert.n);

    const int k = h.colors();
    const double log_base = g.num_edges() * std::log(static_cast<double>(k));
    if (info.r == 0.0) {
        cert.method = DerivativeMethod::Auto;
        cert.log_value = log_base;
        cert.value = mode == ApproxMode::Multiplicative
                         ? cplx(std::pow(static_cast<double>(k), g.num_edges()))
                         : cplx(log_base);
        return cert;
    }

    cert.method = resolve(g, k, std::min(cert.n, g.num_vertices()), method);
    const std::vector<cplx> derivs = normalized_derivatives(g, h, cert.n, cert.method);
    const LogDerivatives f = log_derivatives_from_p(derivs, cert.n);
    cert.log_value = f.taylor(1.0, cert.n) + log_base;
    cert.value = mode == ApproxMode::Multiplicative ? std::exp(cert.log_value)
                                                    : cplx(cert.log_value.real());
    return cert;
}

double magnitude_lower_bound(const Multigraph &g, const RegionParams &params, int k)
{
    params.check_for_degree(g.max_degree());
    return std::pow(std::cos(params.theta() / 2.0) * params.eta(), g.num_vertices()) *
           std::pow(static_cast<double>(k), g.num_edges());
}

TensorAssignment sample_region(const Multigraph &g, const RegionParams &params, int k, Rng &rng)
{
    const double delta = params.delta();
    std::vector<VertexTensor> tensors;
    for (int v = 0; v < g.num_vertices(); v++) {
        const double modulus = params.eta() + delta / 2.0 + rng.uniform() * delta;
        const cplx center = std::polar(modulus, 2.0 * std::numbers::pi * rng.uniform());
        VertexTensor t(k, g.degree(v));
        for (std::size_t i = 0; i < t.indexer().size(); i++) {
            t.raw(i) = center + rng.in_disk(delta / 2.0);
        }
        tensors.push_back(std::move(t));
    }
    return TensorAssignment(k, std::move(tensors));
}

ZeroFreeReport verify_zero_free(const Multigraph &g, const RegionParams &params, int k,
                                int samples, std::uint64_t seed)
{
    ZeroFreeReport report;
    report.bound = magnitude_lower_bound(g, params, k);
    Rng rng(seed);
    for (int s = 0; s < samples; s++) {
        const TensorAssignment t = sample_region(g, params, k, rng);
        if (!params.contains(t)) {
            report.membership_failures++;
            continue;
        }
        const double value = std::abs(contract_network(g, t));
        report.samples++;
        report.min_abs = std::min(report.min_abs, value);
        report.zero_violations += value == 0.0;
        report.bound_violations += value < report.bound;
    }
    return report;
}

}  // namespace holant
