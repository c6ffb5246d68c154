#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "holant/checks/oracles.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/poly.hpp"

using namespace holant;

namespace {

bool near(cplx a, cplx b, double tol = 1e-12)
{
    return std::abs(a - b) <= tol;
}

ComplexPoly from_roots(const std::vector<cplx> &roots)
{
    std::vector<cplx> c{1.0};
    for (const cplx &r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); i++) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return ComplexPoly(c);
}

}  // namespace

TEST_CASE("leading zeros are trimmed")
{
    const ComplexPoly p({1.0, 2.0, 0.0, 0.0});
    CHECK(p.degree() == 1);
    CHECK(ComplexPoly({0.0}).is_zero());
    CHECK(p(3.0) == cplx(7.0));
    CHECK(p.derivative()[0] == cplx(2.0));
}

TEST_CASE("simple roots")
{
    const auto r1 = poly_roots(ComplexPoly({-1.0, 0.0, 1.0}));
    REQUIRE(r1.size() == 2);
    CHECK(near(r1[0] * r1[1], -1.0));
    CHECK(near(r1[0] + r1[1], 0.0));
    CHECK(std::abs(std::abs(r1[0].real()) - 1.0) < 1e-12);
    const auto r2 = poly_roots(ComplexPoly({1.0, 0.0, 1.0}));
    REQUIRE(r2.size() == 2);
    CHECK(near(r2[0], cplx(0, -1)));
    CHECK(near(r2[1], cplx(0, 1)));
    CHECK_THROWS_AS(poly_roots(ComplexPoly({3.0})), PreconditionError);
}

TEST_CASE("zero roots and multiplicities")
{
    const auto r = poly_roots(ComplexPoly({0.0, 0.0, 1.0, 1.0}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == cplx(0.0));
    CHECK(r[1] == cplx(0.0));
    CHECK(near(r[2], -1.0));
    const auto triple = poly_roots(from_roots({2.0, 2.0, 2.0, cplx(0, 1)}));
    CHECK(triple.size() == 4);
    for (int i = 1; i < 4; i++) {
        CHECK(std::abs(triple[i] - 2.0) < 1e-4);
    }
}

TEST_CASE("random polynomials satisfy the residual bound")
{
    Rng rng(31);
    for (int trial = 0; trial < 30; trial++) {
        const int d = 1 + trial % 12;
        std::vector<cplx> c;
        for (int i = 0; i <= d; i++) {
            c.push_back(cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        }
        const ComplexPoly p(c);
        const auto roots = poly_roots(p);
        CHECK(static_cast<int>(roots.size()) == p.degree());
        for (const cplx &z : roots) {
            CHECK(std::abs(p(z)) <=
                  1e-9 * p.max_abs_coefficient() * std::pow(std::max(1.0, std::abs(z)), d));
        }
        CHECK(std::is_sorted(roots.begin(), roots.end(), [](cplx a, cplx b) {
            return std::abs(a) < std::abs(b);
        }));
    }
}

TEST_CASE("known roots are recovered")
{
    const std::vector<cplx> want{cplx(0.5, 0.1), -3.0, cplx(1, -2), cplx(1, 2), 0.25};
    auto got = poly_roots(from_roots(want));
    REQUIRE(got.size() == want.size());
    for (const cplx &w : want) {
        double best = 1e9;
        for (const cplx &g : got) {
            best = std::min(best, std::abs(g - w));
        }
        CHECK(best < 1e-10);
    }
}

TEST_CASE("monic transform of q for the triangle with the matching model")
{
    const Multigraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    const ComplexPoly q =
        exact_poly_by_interpolation(triangle, model_from_predicate(PredicateKind::Matching));
    std::vector<cplx> rev(4);
    for (int j = 0; j <= 3; j++) {
        rev[j] = q[3 - j] / 8.0;
    }
    const ComplexPoly qhat(rev);
    for (const cplx &z : poly_roots(qhat)) {
        CHECK(std::abs(qhat(z)) < 1e-9 * qhat.max_abs_coefficient() *
                                      std::pow(std::max(1.0, std::abs(z)), 3));
    }
}
