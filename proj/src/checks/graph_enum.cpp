#include "holant/checks/graph_enum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "holant/errors.hpp"

namespace holant::checks {

namespace {

using Adjacency = std::vector<std::uint32_t>;

std::uint64_t code_of(const Adjacency &adj, const std::vector<int> &order)
{
    const int n = static_cast<int>(order.size());
    std::uint64_t code = 0;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            code = code << 1 | (adj[order[i]] >> order[j] & 1U);
        }
    }
    return code;
}

// Minimum code over the orderings that list vertices by a refinement-stable
// invariant (degree, then sorted neighbour degrees); only the order inside
// each invariant class is searched.
std::uint64_t canonical_code(const Adjacency &adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> invariant(n);
    for (int v = 0; v < n; v++) {
        invariant[v].push_back(std::popcount(adj[v]));
        std::vector<int> nd;
        for (int u = 0; u < n; u++) {
            if (adj[v] >> u & 1U) {
                nd.push_back(std::popcount(adj[u]));
            }
        }
        std::sort(nd.begin(), nd.end());
        invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return invariant[a] < invariant[b]; });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && invariant[order[j]] == invariant[order[i]]) {
            j++;
        }
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    // Odometer over the permutations of every cell.
    for (auto &[lo, hi] : cells) {
        std::sort(order.begin() + lo, order.begin() + hi);
    }
    for (;;) {
        best = std::min(best, code_of(adj, order));
        std::size_t c = 0;
        for (; c < cells.size(); c++) {
            auto [lo, hi] = cells[c];
            if (std::next_permutation(order.begin() + lo, order.begin() + hi)) {
                break;
            }
        }
        if (c == cells.size()) {
            break;
        }
    }
    return best;
}

Multigraph to_graph(const Adjacency &adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            if (adj[u] >> v & 1U) {
                edges.push_back({u, v});
            }
        }
    }
    return Multigraph(n, edges);
}

std::vector<Adjacency> classes(int n)
{
    if (n == 0) {
        return {Adjacency{}};
    }
    std::vector<Adjacency> out;
    std::set<std::uint64_t> seen;
    for (const Adjacency &base : classes(n - 1)) {
        for (std::uint32_t nb = 0; nb < (1U << (n - 1)); nb++) {
            Adjacency adj = base;
            adj.push_back(nb);
            for (int u = 0; u < n - 1; u++) {
                if (nb >> u & 1U) {
                    adj[u] |= 1U << (n - 1);
                }
            }
            if (seen.insert(canonical_code(adj)).second) {
                out.push_back(std::move(adj));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Multigraph> simple_graphs(int n)
{
    if (n < 0 || n > 8) {
        throw PreconditionError("simple_graphs supports 0..8 vertices");
    }
    std::vector<Multigraph> out;
    for (const Adjacency &adj : classes(n)) {
        out.push_back(to_graph(adj));
    }
    return out;
}

std::vector<Multigraph> simple_graphs_up_to(int max_n)
{
    std::vector<Multigraph> out;
    for (int n = 1; n <= max_n; n++) {
        for (auto &g : simple_graphs(n)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool is_connected(const Multigraph &g)
{
    const int n = g.num_vertices();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

std::vector<Multigraph> connected_simple_graphs_up_to(int max_n)
{
    std::vector<Multigraph> out;
    for (auto &g : simple_graphs_up_to(max_n)) {
        if (is_connected(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace holant::checks
