#include "holant/graph.hpp"

#include <algorithm>
#include <numeric>

#include "holant/errors.hpp"

namespace holant {

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 0) {
        throw PreconditionError("graph: negative vertex count");
    }
    std::vector<int> deg(n, 0);
    for (const auto &e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw PreconditionError("graph: edge endpoint out of range: " + std::to_string(e.u) +
                                    " " + std::to_string(e.v));
        }
        deg[e.u]++;
        deg[e.v]++;
    }
    inc_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; v++) {
        inc_offset_[v + 1] = inc_offset_[v] + deg[v];
    }
    inc_.assign(inc_offset_[n], 0);
    std::vector<int> fill(inc_offset_.begin(), inc_offset_.end() - 1);
    for (int e = 0; e < num_edges(); e++) {
        inc_[fill[edges_[e].u]++] = e;
        inc_[fill[edges_[e].v]++] = e;
    }
    max_degree_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void Multigraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
}

int Multigraph::degree(Vertex v) const
{
    check_vertex(v);
    return inc_offset_[v + 1] - inc_offset_[v];
}

std::span<const int> Multigraph::incidences(Vertex v) const
{
    check_vertex(v);
    return {inc_.data() + inc_offset_[v], inc_.data() + inc_offset_[v + 1]};
}

std::vector<Vertex> Multigraph::neighbours(Vertex v) const
{
    std::vector<Vertex> out;
    for (int e : incidences(v)) {
        const auto &ed = edges_[e];
        Vertex w = ed.u == v ? ed.v : ed.u;
        if (w != v) {
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Multigraph::is_simple() const
{
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges_.size());
    for (const auto &e : edges_) {
        if (e.is_loop()) {
            return false;
        }
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Multigraph Multigraph::disjoint_union(const Multigraph &other) const
{
    auto edges = edges_;
    for (const auto &e : other.edges_) {
        edges.push_back({e.u + n_, e.v + n_});
    }
    return Multigraph(n_ + other.n_, std::move(edges));
}

int degree(const Multigraph &g, Vertex v)
{
    return g.degree(v);
}

std::vector<int> incident_multiset(const Multigraph &g, Vertex v, std::span<const int> coloring,
                                   int k)
{
    if (static_cast<int>(coloring.size()) != g.num_edges()) {
        throw PreconditionError("incident_multiset: coloring size does not match edge count");
    }
    std::vector<int> alpha(k, 0);
    for (int e : g.incidences(v)) {
        int c = coloring[e];
        if (c < 0 || c >= k) {
            throw PreconditionError("incident_multiset: color out of range");
        }
        alpha[c]++;
    }
    return alpha;
}

namespace {

std::vector<char> membership(const Multigraph &g, std::span<const Vertex> U)
{
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex u : U) {
        if (u < 0 || u >= g.num_vertices()) {
            throw PreconditionError("vertex set contains out-of-range vertex " + std::to_string(u));
        }
        in[u] = 1;
    }
    return in;
}

}  // namespace

std::vector<int> edges_touching(const Multigraph &g, std::span<const Vertex> U)
{
    auto in = membership(g, U);
    std::vector<int> out;
    for (int e = 0; e < g.num_edges(); e++) {
        if (in[g.edge(e).u] || in[g.edge(e).v]) {
            out.push_back(e);
        }
    }
    return out;
}

Multigraph induced_subgraph(const Multigraph &g, std::span<const Vertex> U)
{
    auto in = membership(g, U);
    std::vector<int> label(g.num_vertices(), -1);
    int next = 0;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (in[v]) {
            label[v] = next++;
        }
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (in[e.u] && in[e.v]) {
            edges.push_back({label[e.u], label[e.v]});
        }
    }
    return Multigraph(next, std::move(edges));
}

namespace {

// Edge multiplicity matrix, loops on the diagonal.
std::vector<int> multiplicity_matrix(const Multigraph &g)
{
    int n = g.num_vertices();
    std::vector<int> m(n * n, 0);
    for (const auto &e : g.edges()) {
        m[e.u * n + e.v]++;
        if (!e.is_loop()) {
            m[e.v * n + e.u]++;
        }
    }
    return m;
}

std::vector<int> sorted_degrees(const Multigraph &g)
{
    std::vector<int> d(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) {
        d[v] = g.degree(v);
    }
    std::sort(d.begin(), d.end());
    return d;
}

bool extend_isomorphism(int pos, int n, const std::vector<int> &ma, const std::vector<int> &mb,
                        const std::vector<int> &da, const std::vector<int> &db,
                        std::vector<int> &map, std::vector<char> &used)
{
    if (pos == n) {
        return true;
    }
    for (int w = 0; w < n; w++) {
        if (used[w] || da[pos] != db[w]) {
            continue;
        }
        bool ok = ma[pos * n + pos] == mb[w * n + w];
        for (int i = 0; ok && i < pos; i++) {
            ok = ma[pos * n + i] == mb[w * n + map[i]];
        }
        if (!ok) {
            continue;
        }
        used[w] = 1;
        map[pos] = w;
        if (extend_isomorphism(pos + 1, n, ma, mb, da, db, map, used)) {
            return true;
        }
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const Multigraph &a, const Multigraph &b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
        return false;
    }
    if (sorted_degrees(a) != sorted_degrees(b)) {
        return false;
    }
    int n = a.num_vertices();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; v++) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    return extend_isomorphism(0, n, multiplicity_matrix(a), multiplicity_matrix(b), da, db, map,
                              used);
}

std::uint64_t count_induced(const Multigraph &g, const Multigraph &h)
{
    if (!h.is_simple()) {
        throw PreconditionError("count_induced: pattern must be simple");
    }
    const int s = h.num_vertices();
    if (s > 8) {
        throw PreconditionError("count_induced: pattern has more than 8 vertices");
    }
    const int n = g.num_vertices();
    if (s > n) {
        return 0;
    }
    if (s == 0) {
        return 1;
    }
    std::uint64_t count = 0;
    std::vector<Vertex> U(s);
    std::iota(U.begin(), U.end(), 0);
    while (true) {
        auto sub = induced_subgraph(g, U);
        if (sub.num_edges() == h.num_edges() && isomorphic(sub, h)) {
            count++;
        }
        int i = s - 1;
        while (i >= 0 && U[i] == n - s + i) {
            i--;
        }
        if (i < 0) {
            break;
        }
        U[i]++;
        for (int j = i + 1; j < s; j++) {
            U[j] = U[j - 1] + 1;
        }
    }
    return count;
}

}  // namespace holant
