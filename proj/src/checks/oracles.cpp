#include "holant/checks/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace holant::checks {

namespace {

std::uint64_t matchings_from(const Multigraph &g, int e, std::vector<char> &used)
{
    if (e == g.num_edges()) {
        return 1;
    }
    std::uint64_t total = matchings_from(g, e + 1, used);
    const Edge &edge = g.edge(e);
    if (!edge.is_loop() && !used[edge.u] && !used[edge.v]) {
        used[edge.u] = used[edge.v] = 1;
        total += matchings_from(g, e + 1, used);
        used[edge.u] = used[edge.v] = 0;
    }
    return total;
}

std::uint64_t colorings_from(const std::vector<std::vector<int>> &earlier, int v, int q,
                             std::vector<int> &color)
{
    if (v == static_cast<int>(earlier.size())) {
        return 1;
    }
    std::uint64_t total = 0;
    for (int c = 0; c < q; c++) {
        bool ok = true;
        for (int u : earlier[v]) {
            ok = ok && color[u] != c;
        }
        if (ok) {
            color[v] = c;
            total += colorings_from(earlier, v + 1, q, color);
        }
    }
    return total;
}

}  // namespace

std::uint64_t count_matchings(const Multigraph &g)
{
    std::vector<char> used(g.num_vertices(), 0);
    return matchings_from(g, 0, used);
}

std::uint64_t count_proper_colorings(const Multigraph &g, int q)
{
    std::vector<std::vector<int>> earlier(g.num_vertices());
    for (const Edge &e : g.edges()) {
        if (e.is_loop()) {
            return 0;
        }
        earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
    }
    std::vector<int> color(g.num_vertices(), -1);
    return colorings_from(earlier, 0, q, color);
}

Multigraph random_graph(Rng &rng, int n, int max_edges, int max_degree, bool allow_multi)
{
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    std::set<std::pair<int, int>> present;
    const int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges) + 1));
    for (int attempt = 0; attempt < 50 * (target + 1) && static_cast<int>(edges.size()) < target;
         attempt++) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u > v) {
            std::swap(u, v);
        }
        const int extra = u == v ? 2 : 1;
        if (!allow_multi && (u == v || present.count({u, v}))) {
            continue;
        }
        if (deg[u] + extra > max_degree || (u != v && deg[v] + 1 > max_degree)) {
            continue;
        }
        if (u == v) {
            deg[u] += 2;
        } else {
            deg[u]++;
            deg[v]++;
        }
        present.insert({u, v});
        edges.push_back({u, v});
    }
    return Multigraph(n, edges);
}

EdgeColoringModel random_model(Rng &rng, int k, double spread, int degree_bound)
{
    EdgeColoringModel h(k, 1.0);
    for (const Alpha &alpha : multisets_up_to(k, degree_bound)) {
        h.set(alpha, 1.0 + rng.in_disk(spread));
    }
    return h;
}

TensorAssignment random_tensors(Rng &rng, const Multigraph &g, int k, double spread)
{
    std::vector<VertexTensor> tensors;
    for (int v = 0; v < g.num_vertices(); v++) {
        VertexTensor t(k, g.degree(v));
        for (const Alpha &alpha : t.support()) {
            t.set(alpha, 1.0 + rng.in_disk(spread));
        }
        tensors.push_back(std::move(t));
    }
    return TensorAssignment(k, std::move(tensors));
}

double relative_error(cplx a, cplx b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace holant::checks
