#include <doctest.h>

#include <cmath>
#include <numbers>

#include "holant/checks/graph_enum.hpp"
#include "holant/checks/oracles.hpp"
#include "holant/errors.hpp"
#include "holant/exptype.hpp"

using namespace holant;
using checks::relative_error;

namespace {

const Multigraph K1(1);
const Multigraph K2(2, {{0, 1}});
const Multigraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});

int count_partitions(int n, int blocks, int min_block)
{
    int count = 0;
    for_each_set_partition(n, blocks, min_block, [&](const std::vector<int> &) { count++; });
    return count;
}

}  // namespace

TEST_CASE("connected spanning subgraph generating function")
{
    const cplx v(0.3, -1.2);
    CHECK(chi_tutte(K1, v) == cplx(1.0));
    CHECK(chi_tutte(K2, v) == v);
    CHECK(std::abs(chi_tutte(triangle, v) - (3.0 * v * v + v * v * v)) < 1e-14);
    CHECK(chi_tutte(Multigraph(2), v) == cplx(0.0));
}

TEST_CASE("Z(G)(q, v) by direct enumeration")
{
    const cplx q(1.5, 0.5), v(-0.7, 2.0);
    CHECK(std::abs(tutte_direct(K2, q, v) - (q * q + q * v)) < 1e-14);
    CHECK(std::abs(tutte_direct(triangle, q, v) -
                   (q * q * q + 3.0 * q * q * v + 3.0 * q * v * v + q * v * v * v)) < 1e-13);
    CHECK(std::abs(tutte_direct(Multigraph(4), q, v) - std::pow(q, 4)) < 1e-13);
}

TEST_CASE("chromatic specialization counts proper colorings")
{
    for (const Multigraph &g : checks::simple_graphs_up_to(6)) {
        for (int q = 1; q <= 3; q++) {
            CHECK(tutte_direct(g, q, -1.0) ==
                  cplx(static_cast<double>(checks::count_proper_colorings(g, q))));
        }
    }
}

TEST_CASE("set partition generator")
{
    // Stirling numbers of the second kind and Bell numbers.
    CHECK(count_partitions(5, 2, 1) == 15);
    CHECK(count_partitions(6, 3, 1) == 90);
    CHECK(count_partitions(6, -1, 1) == 203);
    CHECK(count_partitions(0, 0, 1) == 1);
    // Partitions into blocks of size >= 2: 6 = 2+2+2 (15 ways), 3+3 (10),
    // 2+4 (15), 6 (1).
    CHECK(count_partitions(6, 3, 2) == 15);
    CHECK(count_partitions(6, 2, 2) == 25);
    CHECK(count_partitions(6, -1, 2) == 41);
    std::vector<std::vector<int>> seen;
    for_each_set_partition(3, 2, 1, [&](const std::vector<int> &a) { seen.push_back(a); });
    CHECK(seen == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}});
}

TEST_CASE("chi_k coefficients")
{
    const cplx v(1.7, 0.4);
    const ExpTypeSpec spec = tutte_spec(v);
    const auto k2 = chi_k_coefficients(K2, spec);
    CHECK(k2[1] == v);
    CHECK(k2[2] == cplx(1.0));
    const auto empty = chi_k_coefficients(Multigraph(4), spec);
    CHECK(empty == std::vector<cplx>{0.0, 0.0, 0.0, 0.0, 1.0});
    Rng rng(2);
    for (int trial = 0; trial < 5; trial++) {
        const Multigraph g = checks::random_graph(rng, 5, 7, 4);
        const auto c = chi_k_coefficients(g, spec);
        CHECK(relative_error(c[1], chi_tutte(g, v)) < 1e-12);
        CHECK(c[5] == cplx(1.0));
    }
}

TEST_CASE("exponential-type assembly equals Z(G)(q, v)")
{
    Rng rng(13);
    for (const cplx v : {cplx(1.0), cplx(-1.0), cplx(2.0, 1.0)}) {
        const ExpTypeSpec spec = tutte_spec(v);
        for (const Multigraph &g : checks::simple_graphs_up_to(5)) {
            const ComplexPoly p = exp_type_poly(g, spec);
            for (int i = 0; i < 4; i++) {
                const cplx q(rng.uniform(-4, 4), rng.uniform(-4, 4));
                CHECK(relative_error(p(q), tutte_direct(g, q, v)) < 1e-8);
            }
        }
    }
}

TEST_CASE("derivatives of the monic transform")
{
    const ExpTypeSpec spec = tutte_spec(cplx(0.5, 1.0));
    Rng rng(4);
    for (int trial = 0; trial < 8; trial++) {
        const Multigraph g = checks::random_graph(rng, 3 + trial % 4, 8, 4);
        const int n = g.num_vertices();
        const auto chi = chi_k_coefficients(g, spec);
        CHECK(qhat_derivative(g, spec, 0) == cplx(1.0));
        CHECK(relative_error(qhat_derivative(g, spec, n - 1), factorial(n - 1) * chi_tutte(g, cplx(0.5, 1.0))) < 1e-12);
        for (int m = 0; m <= n; m++) {
            const cplx want = factorial(m) * chi[n - m];
            const cplx fast = qhat_derivative(g, spec, m);
            const cplx slow = qhat_derivative_bruteforce(g, spec, m);
            CHECK(std::abs(fast - want) <= 1e-10 * std::max(1.0, std::abs(want)));
            CHECK(std::abs(slow - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("certified evaluation for large |x|")
{
    // v = 0: only the all-singleton partition survives, so p = x^n.
    ExpTypeSpec zero = tutte_spec(0.0);
    zero.root_radius = 0.0;
    const ApproxCertificate c0 = eval_exp_type(triangle, zero, cplx(3.0, 1.0), 1e-3,
                                               ApproxMode::Multiplicative);
    CHECK(relative_error(c0.value, std::pow(cplx(3.0, 1.0), 3)) < 1e-12);

    ExpTypeSpec ones = tutte_spec(1.0);
    const RootRadiusEstimate est = estimate_root_radius(ones, 2, {K2});
    CHECK(est.heuristic);
    CHECK(est.radius == doctest::Approx(1.5));
    ones.root_radius = est.radius;
    ones.heuristic_radius = true;
    const ApproxCertificate c1 = eval_exp_type(K2, ones, 10.0, 1e-3, ApproxMode::Multiplicative);
    CHECK(c1.heuristic_radius);
    CHECK(std::abs(std::log(c1.value / 110.0)) <= 1e-3);

    ones.root_radius = estimate_root_radius(ones, 2, {triangle}).radius;
    const ApproxCertificate c2 =
        eval_exp_type(triangle, ones, 20.0, 1e-3, ApproxMode::Multiplicative);
    const cplx exact = tutte_direct(triangle, 20.0, 1.0);
    cplx diff = c2.log_value - std::log(exact);
    diff.imag(std::remainder(diff.imag(), 2 * std::numbers::pi));
    CHECK(std::abs(diff) <= c2.bound);

    const ApproxCertificate add = eval_exp_type(triangle, ones, 20.0, 1e-3, ApproxMode::Additive);
    CHECK(std::abs(add.value.real() - std::log(std::abs(exact))) <= 3e-3);
}

TEST_CASE("eval_exp_type preconditions")
{
    ExpTypeSpec spec = tutte_spec(1.0);
    CHECK_THROWS_AS(eval_exp_type(K2, spec, 10.0, 1e-3, ApproxMode::Multiplicative),
                    PreconditionError);
    spec.root_radius = 20.0;
    CHECK_THROWS_AS(eval_exp_type(K2, spec, 10.0, 1e-3, ApproxMode::Multiplicative),
                    OutsideRegionError);
}

TEST_CASE("root radius estimates")
{
    ExpTypeSpec trivial;
    trivial.name = "singletons";
    trivial.chi = [](const Multigraph &g) { return cplx(g.num_vertices() == 1 ? 1.0 : 0.0); };
    const RootRadiusEstimate est = estimate_root_radius(trivial, 3, {K2, triangle});
    CHECK(est.radius == 0.0);
    CHECK(est.graphs_used == 2);

    std::vector<Multigraph> samples;
    for (const Multigraph &g : checks::connected_simple_graphs_up_to(5)) {
        samples.push_back(g);
    }
    const RootRadiusEstimate tutte = estimate_root_radius(tutte_spec(1.0), 3, samples);
    CHECK(std::isfinite(tutte.radius));
    CHECK(tutte.radius > 0.0);
}

TEST_CASE("spec names")
{
    CHECK(parse_exptype_spec("chromatic").name == "chromatic");
    const ExpTypeSpec s = parse_exptype_spec("tutte:v=2,1");
    CHECK(s.chi(K2) == cplx(2.0, 1.0));
    CHECK_THROWS_AS(parse_exptype_spec("tutte:v=x"), ParseError);
    CHECK_THROWS_AS(parse_exptype_spec("adjoint"), ParseError);
}
