#include "holant/checks/selftest.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "holant/barvinok.hpp"
#include "holant/checks/graph_enum.hpp"
#include "holant/checks/oracles.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/exptype.hpp"
#include "holant/limits.hpp"
#include "holant/model_io.hpp"

namespace holant::checks {

namespace {

template <class F>
CheckResult check(const std::string &name, F &&body)
{
    CheckResult result{name, false, ""};
    try {
        std::ostringstream detail;
        result.passed = body(detail);
        result.detail = detail.str();
    } catch (const std::exception &e) {
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::ostream *progress)
{
    std::vector<CheckResult> results;
    auto add = [&](CheckResult r) {
        if (progress) {
            *progress << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
        }
        results.push_back(std::move(r));
    };

    add(check("constants", [](std::ostream &d) {
        const ZeroFreeConstants c = zero_free_constants();
        d << "theta*=" << c.theta_star << " x*=" << c.x_star << " beta*(1)=" << c.beta_star(1);
        return std::abs(c.theta_star - 1.72067) < 1e-4 && std::abs(c.x_star - 1.12219) < 1e-4 &&
               std::abs(c.beta_star(1) - 0.71885) < 1e-4;
    }));

    add(check("matching model vs matching enumerator, graphs <= 6 vertices", [](std::ostream &d) {
        const EdgeColoringModel h = model_from_predicate(PredicateKind::Matching);
        int graphs = 0, bad = 0;
        for (const Multigraph &g : simple_graphs_up_to(6)) {
            graphs++;
            bad += exact_partition(g, h) != cplx(static_cast<double>(count_matchings(g)));
        }
        d << graphs << " graphs, " << bad << " mismatches";
        return bad == 0 && graphs == 156 + 34 + 11 + 4 + 2 + 1;
    }));

    add(check("q derivatives vs interpolation", [](std::ostream &d) {
        Rng rng(11);
        double worst = 0.0;
        for (int trial = 0; trial < 10; trial++) {
            const int k = 2 + trial % 2;
            const Multigraph g = random_graph(rng, 2 + static_cast<int>(rng.below(5)), 8, 4);
            const EdgeColoringModel h = random_model(rng, k, 1.0, std::max(1, g.max_degree()));
            const ComplexPoly q = exact_poly_by_interpolation(g, h);
            for (auto method : {DerivativeMethod::Subsets, DerivativeMethod::Clusters}) {
                for (int m = 0; m <= g.num_vertices(); m++) {
                    const cplx want = factorial(m) * q[m];
                    const cplx got = q_derivative(g, h, m, method);
                    worst = std::max(worst, relative_error(got, want));
                }
            }
        }
        d << "max relative error " << worst;
        return worst <= 1e-7;
    }));

    add(check("tutte pipeline and chromatic counts, connected graphs <= 5 vertices",
              [](std::ostream &d) {
                  Rng rng(5);
                  double worst = 0.0;
                  int bad = 0;
                  const cplx v(2.0, 1.0);
                  const ExpTypeSpec spec = tutte_spec(v);
                  for (const Multigraph &g : connected_simple_graphs_up_to(5)) {
                      const ComplexPoly p = exp_type_poly(g, spec);
                      for (int i = 0; i < 3; i++) {
                          const cplx q(rng.uniform(-3, 3), rng.uniform(-3, 3));
                          worst = std::max(worst, relative_error(p(q), tutte_direct(g, q, v)));
                      }
                      for (int q = 2; q <= 3; q++) {
                          bad += tutte_direct(g, q, -1.0) !=
                                 cplx(static_cast<double>(count_proper_colorings(g, q)));
                      }
                  }
                  d << "max relative error " << worst << ", chromatic mismatches " << bad;
                  return worst <= 1e-8 && bad == 0;
              }));

    add(check("cycle transfer matrix vs exact", [](std::ostream &d) {
        Rng rng(3);
        double worst = 0.0;
        for (int n = 1; n <= 8; n++) {
            const EdgeColoringModel h = random_model(rng, 3, 1.0, 2);
            worst = std::max(worst, relative_error(cycle_transfer_pf(h, n),
                                                   exact_partition(make_cycle(n), h)));
        }
        d << "max relative error " << worst;
        return worst <= 1e-10;
    }));

    add(check("log-potential identity", [](std::ostream &d) {
        Rng rng(8);
        double worst = 0.0;
        for (int trial = 0; trial < 5; trial++) {
            const Multigraph g = random_graph(rng, 3 + trial, 8, 3);
            const EdgeColoringModel h = perturbed_ones_model(2, 0.05, rng.next(), 3);
            worst = std::max(worst, log_potential_check(g, h).discrepancy);
        }
        d << "max discrepancy " << worst;
        return worst <= 1e-7;
    }));

    add(check("certified approximation vs exact", [](std::ostream &d) {
        Rng rng(21);
        int violations = 0;
        for (int trial = 0; trial < 5; trial++) {
            const Multigraph g = random_graph(rng, 6, 9, 3);
            const EdgeColoringModel h = perturbed_ones_model(2, 0.05, rng.next(), 3);
            const ApproxCertificate cert = approx_partition(g, h, 1e-3, ApproxMode::Multiplicative);
            const cplx exact = exact_partition(g, h);
            cplx diff = cert.log_value - std::log(exact);
            diff.imag(std::remainder(diff.imag(), 2.0 * std::numbers::pi));
            violations += std::abs(diff) > cert.bound;
        }
        d << violations << " bound violations";
        return violations == 0;
    }));

    return results;
}

}  // namespace holant::checks
