#include "holant/limits.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/poly.hpp"

namespace holant {

double normalized_pf(const Multigraph &g, const EdgeColoringModel &h, EngineChoice engine)
{
    if (g.num_vertices() == 0) {
        throw PreconditionError("normalized_pf needs at least one vertex");
    }
    if (engine.kind == EngineChoice::Approx) {
        const ApproxCertificate cert = approx_partition(g, h, engine.eps, ApproxMode::Additive);
        return cert.value.real() / g.num_vertices();
    }
    const double value = std::abs(exact_partition(g, h));
    if (value == 0.0) {
        throw PreconditionError("p(G)(h) = 0, so ln|p| is undefined");
    }
    return std::log(value) / g.num_vertices();
}

CMatrix cycle_transfer_matrix(const EdgeColoringModel &h)
{
    const int k = h.colors();
    CMatrix T(k, k);
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            Alpha alpha(k, 0);
            alpha[i]++;
            alpha[j]++;
            T(i, j) = h(alpha);
        }
    }
    return T;
}

cplx cycle_transfer_pf(const EdgeColoringModel &h, int n)
{
    if (n < 1) {
        throw PreconditionError("cycle length must be >= 1");
    }
    CMatrix base = cycle_transfer_matrix(h);
    CMatrix result = CMatrix::Identity(base.rows(), base.cols());
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base;
        }
        if (e > 1) {
            base = base * base;
        }
    }
    return result.trace();
}

double cycle_transfer_log_abs(const EdgeColoringModel &h, int n)
{
    if (n < 1) {
        throw PreconditionError("cycle length must be >= 1");
    }
    auto rescale = [](CMatrix &m, double &log_scale) {
        const double s = m.cwiseAbs().maxCoeff();
        if (s > 0.0) {
            m /= s;
            log_scale += std::log(s);
        }
    };
    CMatrix base = cycle_transfer_matrix(h);
    double base_log = 0.0;
    rescale(base, base_log);
    CMatrix result = CMatrix::Identity(base.rows(), base.cols());
    double result_log = 0.0;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base;
            result_log += base_log;
            rescale(result, result_log);
        }
        if (e > 1) {
            base = base * base;
            base_log *= 2.0;
            rescale(base, base_log);
        }
    }
    const double tr = std::abs(result.trace());
    if (tr == 0.0) {
        throw PreconditionError("trace(T^n) = 0, so ln|p| is undefined");
    }
    return std::log(tr) + result_log;
}

double log_lambda_max(const EdgeColoringModel &h)
{
    Eigen::ComplexEigenSolver<CMatrix> solver(cycle_transfer_matrix(h), false);
    return std::log(solver.eigenvalues().cwiseAbs().maxCoeff());
}

ConvergenceReport convergence_run(const std::vector<GraphFamilySpec> &family,
                                  const EdgeColoringModel &h, double eps, double tol)
{
    ConvergenceReport report;
    report.tolerance = tol;
    std::vector<GraphFamilySpec> members = family;
    std::stable_sort(members.begin(), members.end(), [](const auto &a, const auto &b) {
        return a.size * std::max(1, a.size2) < b.size * std::max(1, b.size2);
    });
    if (!members.empty()) {
        report.family = members.front().to_string();
        const auto colon = report.family.find(':');
        report.family = report.family.substr(0, colon);
    }
    std::optional<double> previous;
    for (const GraphFamilySpec &spec : members) {
        const Multigraph g = generate(spec);
        const int n = g.num_vertices();
        report.sizes.push_back(n);
        report.densities.push_back(n == 0 ? 0.0 : static_cast<double>(g.num_edges()) / n);
        std::optional<double> value;
        std::string error;
        std::string engine;
        try {
            if (spec.family == Family::Cycle) {
                engine = "transfer";
                value = cycle_transfer_log_abs(h, spec.size) / n;
            } else {
                engine = "approx";
                value = normalized_pf(g, h, {EngineChoice::Approx, eps});
            }
        } catch (const Error &e) {
            error = e.what();
        }
        report.engines.push_back(engine);
        report.errors.push_back(error);
        report.values.push_back(value);
        if (value && previous) {
            report.diffs.push_back(*value - *previous);
        }
        if (value) {
            previous = value;
        }
    }
    const std::size_t tail = std::min<std::size_t>(3, report.diffs.size());
    report.cauchy = tail > 0;
    for (std::size_t i = report.diffs.size() - tail; i < report.diffs.size(); i++) {
        report.cauchy = report.cauchy && std::abs(report.diffs[i]) < tol;
    }
    return report;
}

LogPotentialResult log_potential_check(const Multigraph &g, const EdgeColoringModel &h)
{
    const int n = g.num_vertices();
    if (n == 0) {
        throw PreconditionError("log_potential_check needs at least one vertex");
    }
    const int k = h.colors();
    const ComplexPoly q = exact_poly_by_interpolation(g, h);
    const double scale = std::pow(static_cast<double>(k), -static_cast<double>(g.num_edges()));
    std::vector<cplx> reversed(n + 1);
    for (int j = 0; j <= n; j++) {
        reversed[j] = scale * q[n - j];
    }
    LogPotentialResult out;
    out.roots = poly_roots(ComplexPoly(reversed));
    double sum = 0.0;
    for (const cplx &z : out.roots) {
        const double d = std::abs(1.0 - z);
        if (d == 0.0) {
            throw PreconditionError("qhat has a root at 1, so p(G)(h) = 0");
        }
        sum += std::log(d);
    }
    out.lhs = sum / n;
    out.rhs = normalized_pf(g, h) -
              static_cast<double>(g.num_edges()) / n * std::log(static_cast<double>(k));
    out.discrepancy = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace holant
