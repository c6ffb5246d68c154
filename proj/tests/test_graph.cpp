#include <doctest.h>

#include <sstream>

#include "holant/checks/graph_enum.hpp"
#include "holant/errors.hpp"
#include "holant/graph.hpp"

using namespace holant;

TEST_CASE("loops count twice toward the degree")
{
    const Multigraph g(2, {{0, 0}, {0, 1}, {0, 1}});
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 4);
    CHECK_FALSE(g.is_simple());
    CHECK(g.incidences(0).size() == 4);
    CHECK_THROWS_AS(degree(g, 2), PreconditionError);
}

TEST_CASE("incident multiset of a coloring")
{
    const Multigraph g(2, {{0, 0}, {0, 1}});
    const std::vector<int> coloring{1, 0};
    CHECK(incident_multiset(g, 0, coloring, 2) == std::vector<int>{1, 2});
    CHECK(incident_multiset(g, 1, coloring, 2) == std::vector<int>{1, 0});
}

TEST_CASE("edges touching and induced subgraphs")
{
    const Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const std::vector<int> U{1};
    CHECK(edges_touching(p4, U) == std::vector<int>{0, 1});
    const std::vector<int> W{1, 2, 3};
    const Multigraph h = induced_subgraph(p4, W);
    CHECK(h.num_vertices() == 3);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("induced copies")
{
    const Multigraph k4 = generate(parse_family("complete:4"));
    const Multigraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(count_induced(k4, triangle) == 4);
    const Multigraph c5 = generate(parse_family("cycle:5"));
    const Multigraph p3(3, {{0, 1}, {1, 2}});
    CHECK(count_induced(c5, p3) == 5);
    CHECK(count_induced(c5, triangle) == 0);
}

TEST_CASE("isomorphism")
{
    const Multigraph a(4, {{0, 1}, {1, 2}, {2, 3}});
    const Multigraph b(4, {{2, 0}, {0, 3}, {3, 1}});
    const Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, star));
    CHECK(isomorphic(Multigraph(2, {{0, 1}, {0, 1}}), Multigraph(2, {{1, 0}, {1, 0}})));
    CHECK_FALSE(isomorphic(Multigraph(2, {{0, 1}, {0, 1}}), Multigraph(2, {{0, 1}, {0, 0}})));
}

TEST_CASE("families")
{
    const Multigraph torus = generate(parse_family("torus2d:3x4"));
    CHECK(torus.num_vertices() == 12);
    CHECK(torus.num_edges() == 24);
    for (int v = 0; v < 12; v++) {
        CHECK(torus.degree(v) == 4);
    }
    const Multigraph rr = generate(parse_family("random-regular:20:3:5"));
    CHECK(rr.is_simple());
    for (int v = 0; v < 20; v++) {
        CHECK(rr.degree(v) == 3);
    }
    CHECK(rr == generate(parse_family("random-regular:20:3:5")));
    CHECK(generate(parse_family("path:5")).num_edges() == 4);
    CHECK(parse_family("torus2d:3x4").declared_max_degree() == 4);
    CHECK_THROWS_AS(parse_family("hexagon:3"), ParseError);
    CHECK_THROWS_AS(parse_family("cycle:x"), ParseError);
    CHECK_THROWS_AS(generate(parse_family("random-regular:5:3")), PreconditionError);
}

TEST_CASE("small cycles are multigraphs")
{
    CHECK(make_cycle(1).degree(0) == 2);
    CHECK(make_cycle(2).num_edges() == 2);
    CHECK(make_cycle(2).degree(1) == 2);
}

TEST_CASE("edge list round trip and inline form")
{
    const Multigraph g(3, {{0, 1}, {1, 2}, {2, 2}});
    std::stringstream s;
    write_edge_list(s, g);
    CHECK(read_edge_list(s) == g);
    CHECK(parse_inline_graph("3:0-1,1-2,2-2") == g);
    CHECK(parse_inline_graph("2:") == Multigraph(2));
    CHECK_THROWS_AS(parse_inline_graph("2:0-5"), ParseError);
    std::stringstream bad("2 1\n0\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("disjoint union shifts the second graph")
{
    const Multigraph a(2, {{0, 1}});
    const Multigraph u = a.disjoint_union(a);
    CHECK(u.num_vertices() == 4);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("graph enumeration matches the known class counts")
{
    // Isomorphism classes of simple graphs on n vertices.
    const int counts[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; n++) {
        CHECK(checks::simple_graphs(n).size() == static_cast<std::size_t>(counts[n]));
    }
    // Connected classes: 1, 1, 2, 6, 21 for n = 1..5.
    CHECK(checks::connected_simple_graphs_up_to(5).size() == 1 + 1 + 2 + 6 + 21);
}
