#include <doctest.h>

#include <cmath>

#include "holant/barvinok.hpp"
#include "holant/checks/graph_enum.hpp"
#include "holant/checks/oracles.hpp"
#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "holant/parallel.hpp"

using namespace holant;
using checks::relative_error;

namespace {

const Multigraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});

}  // namespace

TEST_CASE("all-ones model counts colorings")
{
    const Multigraph g = generate(parse_family("torus2d:3x3"));
    CHECK(exact_partition(g, EdgeColoringModel::constant(2, 1.0)) == cplx(std::pow(2.0, 18)));
    CHECK(exact_partition(Multigraph(3), EdgeColoringModel::constant(3, 1.0)) == cplx(1.0));
}

TEST_CASE("matching model")
{
    const EdgeColoringModel m = model_from_predicate(PredicateKind::Matching);
    CHECK(exact_partition(triangle, m) == cplx(4.0));
    CHECK(exact_partition(make_cycle(4), m) == cplx(7.0));
    // Loops never belong to a matching.
    CHECK(exact_partition(make_cycle(1), m) == cplx(1.0));
    for (const Multigraph &g : checks::simple_graphs_up_to(6)) {
        CHECK(exact_partition(g, m) == cplx(static_cast<double>(checks::count_matchings(g))));
    }
}

TEST_CASE("d-regular model on C_4 selects the cycle itself")
{
    CHECK(exact_partition(make_cycle(4), model_from_predicate(PredicateKind::DRegular, 2, 2)) ==
          cplx(1.0));
}

TEST_CASE("multiplicative over disjoint unions")
{
    Rng rng(2);
    for (int trial = 0; trial < 6; trial++) {
        const Multigraph a = checks::random_graph(rng, 4, 5, 3, true);
        const Multigraph b = checks::random_graph(rng, 3, 4, 3, true);
        const EdgeColoringModel h = checks::random_model(rng, 2, 1.0, 6);
        CHECK(relative_error(exact_partition(a.disjoint_union(b), h),
                             exact_partition(a, h) * exact_partition(b, h)) < 1e-12);
    }
}

TEST_CASE("contraction examples")
{
    const Multigraph edge(2, {{0, 1}});
    VertexTensor first(2, 1, 0.0);
    first.set({1, 0}, 1.0);
    const TensorAssignment t(2, {first, VertexTensor(2, 1, 1.0)});
    CHECK(contract_network(edge, t) == cplx(1.0));
    CHECK(contract_network(triangle, TensorAssignment::constant(triangle, 3, 1.0)) == cplx(27.0));
    CHECK_THROWS_AS(contract_network(triangle, TensorAssignment::constant(edge, 2, 1.0)),
                    PreconditionError);
}

TEST_CASE("restricted partitions split the coloring space")
{
    Rng rng(5);
    const Multigraph g = checks::random_graph(rng, 5, 7, 4, true);
    const TensorAssignment t = checks::random_tensors(rng, g, 2, 1.0);
    const cplx total = contract_network(g, t);
    CHECK(restricted_partition(g, t, {}) == total);

    const std::vector<int> F{0, 2};
    cplx sum = 0.0;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            sum += restricted_partition(g, t, {F, {a, b}});
        }
    }
    CHECK(relative_error(sum, total) < 1e-12);

    // F = E leaves a single product.
    RestrictedSpec all;
    for (int e = 0; e < g.num_edges(); e++) {
        all.F.push_back(e);
        all.phi.push_back(e % 2);
    }
    cplx product = 1.0;
    for (int v = 0; v < g.num_vertices(); v++) {
        const auto alpha = incident_multiset(g, v, all.phi, 2);
        product *= t[v].at(alpha);
    }
    CHECK(relative_error(restricted_partition(g, t, all), product) < 1e-14);
    CHECK_THROWS_AS(restricted_partition(g, t, {{99}, {0}}), PreconditionError);
}

TEST_CASE("budget guard")
{
    const std::uint64_t saved = budget();
    set_budget(1000);
    const Multigraph g = generate(parse_family("torus2d:3x4"));
    CHECK_THROWS_AS(exact_partition(g, EdgeColoringModel::constant(2, 1.0)), BudgetExceeded);
    set_budget(saved);
}

TEST_CASE("thread count does not change the value")
{
    Rng rng(12);
    const Multigraph g = generate(parse_family("torus2d:3x4"));
    const TensorAssignment t = checks::random_tensors(rng, g, 2, 0.5);
    set_threads(1);
    const cplx serial = contract_network(g, t);
    set_threads(4);
    const cplx parallel = contract_network(g, t);
    set_threads(0);
    CHECK(serial == parallel);
}

TEST_CASE("interpolated polynomial")
{
    Rng rng(7);
    const Multigraph g = checks::random_graph(rng, 6, 8, 3);
    const EdgeColoringModel h = checks::random_model(rng, 2, 1.0, 3);
    const ComplexPoly q = exact_poly_by_interpolation(g, h);
    const double base = std::pow(2.0, g.num_edges());
    CHECK(relative_error(q[0], base) < 1e-12);
    CHECK(relative_error(q(1.0), exact_partition(g, h)) < 1e-8);

    // Leading coefficient: every vertex carries h - I.
    TensorAssignment D = TensorAssignment::from_model(g, h);
    for (int v = 0; v < D.size(); v++) {
        for (const Alpha &alpha : D[v].support()) {
            D[v].set(alpha, D[v].at(alpha) - 1.0);
        }
    }
    CHECK(relative_error(q[g.num_vertices()], contract_network(g, D)) < 1e-7);

    const ComplexPoly ones = exact_poly_by_interpolation(g, EdgeColoringModel::constant(2, 1.0));
    CHECK(ones.degree() == 0);
    CHECK(ones[0] == cplx(base));
}

TEST_CASE("vertex partition on a single edge")
{
    CVector a(2);
    a << 1.0, 2.0;
    CMatrix B(2, 2);
    B << 1.0, 3.0, 3.0, 5.0;
    // 1*1*1 + 1*2*3 + 2*1*3 + 2*2*5
    CHECK(vertex_partition(Multigraph(2, {{0, 1}}), VertexModel(a, B)) == cplx(33.0));
}
