#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace holant {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected multigraph with loops and parallel edges.
///
/// A loop at v contributes 2 to degree(v) and appears twice in v's incidence
/// list, so the color it carries is seen twice by v. Immutable once built.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n, std::vector<Edge> edges = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int e) const { return edges_[e]; }

    /// Non-loop incidences plus twice the loops at v.
    int degree(Vertex v) const;
    int max_degree() const { return max_degree_; }

    /// Edge indices incident with v; a loop is listed twice.
    std::span<const int> incidences(Vertex v) const;

    /// Distinct neighbours of v (excluding v itself), ascending.
    std::vector<Vertex> neighbours(Vertex v) const;

    bool is_simple() const;

    /// Disjoint union; vertices of `other` are shifted by num_vertices().
    Multigraph disjoint_union(const Multigraph &other) const;

    friend bool operator==(const Multigraph &, const Multigraph &) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> inc_offset_;
    std::vector<int> inc_;
    int max_degree_ = 0;
};

/// Degree of v; throws PreconditionError when v is out of range.
int degree(const Multigraph &g, Vertex v);

/// Color multiset seen by v under `coloring` (one color in [0,k) per edge),
/// as its incidence vector in N^k. Loops count their color twice.
std::vector<int> incident_multiset(const Multigraph &g, Vertex v,
                                   std::span<const int> coloring, int k);

/// E(U): indices of the edges with at least one endpoint in U, ascending.
std::vector<int> edges_touching(const Multigraph &g, std::span<const Vertex> U);

/// G[U]. Vertices are relabelled 0..|U|-1 in ascending order of their
/// original index; edges keep their original relative order.
Multigraph induced_subgraph(const Multigraph &g, std::span<const Vertex> U);

/// Number of vertex subsets U with G[U] isomorphic to h (h simple, at most
/// 8 vertices).
std::uint64_t count_induced(const Multigraph &g, const Multigraph &h);

/// Isomorphism test for small multigraphs (brute force over permutations
/// respecting degrees). Intended for at most 8 vertices.
bool isomorphic(const Multigraph &a, const Multigraph &b);

// ---------------------------------------------------------------------------
// Families

enum class Family { Cycle, Path, Torus2d, RandomRegular, Complete };

struct GraphFamilySpec {
    Family family = Family::Cycle;
    int size = 0;          ///< n (cycle, path, complete, random-regular) or rows (torus)
    int size2 = 0;         ///< columns (torus)
    int degree = 0;        ///< random-regular only
    std::uint64_t seed = 0;

    /// Declared maximum degree of every graph in the family.
    int declared_max_degree() const;
    std::string to_string() const;
};

/// Deterministic generator. Every produced graph is simple with maximum
/// degree at most spec.declared_max_degree().
Multigraph generate(const GraphFamilySpec &spec);

/// Parses "cycle:5", "path:7", "complete:4", "torus2d:3x4",
/// "random-regular:20:3[:seed]".
GraphFamilySpec parse_family(const std::string &text);

/// C_n as a multigraph; n = 1 is a single loop and n = 2 a double edge.
Multigraph make_cycle(int n);

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" followed by m lines "u v".

Multigraph read_edge_list(std::istream &in);
Multigraph read_edge_list_file(const std::string &path);
void write_edge_list(std::ostream &out, const Multigraph &g);

/// Inline form "n:u-v,u-v,..." (e.g. "3:0-1,1-2,2-0").
Multigraph parse_inline_graph(const std::string &text);

}  // namespace holant
