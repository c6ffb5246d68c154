#include <doctest.h>

#include <cmath>

#include "holant/barvinok.hpp"
#include "holant/checks/oracles.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/limits.hpp"
#include "holant/model_io.hpp"

using namespace holant;
using checks::relative_error;

TEST_CASE("normalized partition function")
{
    const Multigraph c4 = make_cycle(4);
    CHECK(normalized_pf(c4, EdgeColoringModel::constant(3, 1.0)) == doctest::Approx(std::log(3.0)));
    CHECK(normalized_pf(c4, model_from_predicate(PredicateKind::Matching)) ==
          doctest::Approx(std::log(7.0) / 4));
    Rng rng(1);
    const Multigraph g = checks::random_graph(rng, 5, 6, 3);
    const EdgeColoringModel h = checks::random_model(rng, 2, 0.5, 3);
    CHECK(normalized_pf(g.disjoint_union(g), h) == doctest::Approx(normalized_pf(g, h)));
    const EdgeColoringModel near = perturbed_ones_model(2, 0.05, 4, 3);
    CHECK(std::abs(normalized_pf(g, near, {EngineChoice::Approx, 1e-3}) - normalized_pf(g, near)) <=
          1e-3);
    CHECK_THROWS_AS(normalized_pf(make_cycle(3), EdgeColoringModel::constant(2, 0.0)),
                    PreconditionError);
}

TEST_CASE("transfer matrix on cycles")
{
    CHECK(cycle_transfer_pf(EdgeColoringModel::constant(2, 1.0), 10) == cplx(1024.0));
    CHECK(std::abs(cycle_transfer_pf(model_from_predicate(PredicateKind::Matching), 3) - 4.0) <
          1e-12);
    Rng rng(3);
    for (int trial = 0; trial < 5; trial++) {
        const EdgeColoringModel h = checks::random_model(rng, 2 + trial % 2, 1.0, 2);
        for (int n = 1; n <= 8; n++) {
            CHECK(relative_error(cycle_transfer_pf(h, n), exact_partition(make_cycle(n), h)) <
                  1e-10);
            CHECK(cycle_transfer_log_abs(h, n) ==
                  doctest::Approx(std::log(std::abs(cycle_transfer_pf(h, n)))));
        }
    }
}

TEST_CASE("cycle values approach the top eigenvalue")
{
    const EdgeColoringModel h = perturbed_ones_model(2, 0.05, 8, 2);
    const double top = log_lambda_max(h);
    for (int n = 50; n <= 400; n += 50) {
        CHECK(std::abs(cycle_transfer_log_abs(h, n) / n - top) <= 10.0 / n);
    }
}

TEST_CASE("convergence runs")
{
    std::vector<GraphFamilySpec> cycles;
    for (int n = 50; n <= 200; n += 50) {
        cycles.push_back(parse_family("cycle:" + std::to_string(n)));
    }
    const ConvergenceReport ones = convergence_run(cycles, EdgeColoringModel::constant(2, 1.0), 1e-2);
    CHECK(ones.family == "cycle");
    CHECK(ones.sizes == std::vector<int>{50, 100, 150, 200});
    for (const auto &v : ones.values) {
        REQUIRE(v);
        CHECK(*v == doctest::Approx(std::log(2.0)));
    }
    for (double d : ones.diffs) {
        CHECK(std::abs(d) < 1e-12);
    }
    CHECK(ones.cauchy);
    CHECK(ones.engines.front() == "transfer");

    std::vector<GraphFamilySpec> rr;
    for (int n = 10; n <= 30; n += 10) {
        rr.push_back(parse_family("random-regular:" + std::to_string(n) + ":3:2"));
    }
    const ConvergenceReport approx = convergence_run(rr, perturbed_ones_model(2, 0.05, 3, 3), 1e-2);
    CHECK(approx.values.size() == 3);
    CHECK(approx.engines.front() == "approx");
    CHECK(approx.errors.front().empty());

    const ConvergenceReport outside = convergence_run(rr, perturbed_ones_model(2, 0.5, 3, 3), 1e-2);
    CHECK_FALSE(outside.errors.front().empty());
    CHECK_FALSE(outside.values.front());
}

TEST_CASE("log-potential identity")
{
    const LogPotentialResult ones = log_potential_check(make_cycle(4), EdgeColoringModel::constant(2, 1.0));
    CHECK(ones.lhs == 0.0);
    CHECK(ones.rhs == doctest::Approx(0.0));
    const LogPotentialResult matching =
        log_potential_check(make_cycle(3), model_from_predicate(PredicateKind::Matching));
    CHECK(matching.discrepancy <= 1e-7);
    Rng rng(12);
    for (int trial = 0; trial < 5; trial++) {
        const Multigraph g = checks::random_graph(rng, 4 + trial, 10, 3);
        const EdgeColoringModel h = perturbed_ones_model(2, 0.05, rng.next(), 3);
        const LogPotentialResult r = log_potential_check(g, h);
        CHECK(r.discrepancy <= 1e-7);
        // In-region roots of qhat lie within 1/M of the origin.
        const double M = radius_info(h, g.max_degree()).M;
        for (const cplx &z : r.roots) {
            CHECK(std::abs(z) <= 1.0 / M + 1e-6);
        }
    }
}
