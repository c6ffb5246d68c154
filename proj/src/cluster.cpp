#include "cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "network.hpp"

namespace holant::detail {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<int> &v) const
    {
        std::size_t h = v.size();
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class SetEnumerator {
public:
    SetEnumerator(const Multigraph &g, int N) : g_(g), N_(N), mark_(g.num_vertices(), 0)
    {
        for (int v = 0; v < g.num_vertices(); v++) {
            nbrs_.push_back(g.neighbours(v));
        }
    }

    std::vector<std::vector<int>> run()
    {
        for (int v = 0; v < g_.num_vertices(); v++) {
            std::vector<int> ext;
            for (int u : nbrs_[v]) {
                if (u > v) {
                    ext.push_back(u);
                }
            }
            add(v);
            extend(ext, v);
            remove(v);
        }
        return std::move(out_);
    }

private:
    void add(int w)
    {
        sub_.push_back(w);
        mark_[w]++;
        for (int u : nbrs_[w]) {
            mark_[u]++;
        }
    }

    void remove(int w)
    {
        sub_.pop_back();
        mark_[w]--;
        for (int u : nbrs_[w]) {
            mark_[u]--;
        }
    }

    void extend(std::vector<int> ext, int root)
    {
        std::vector<int> sorted = sub_;
        std::sort(sorted.begin(), sorted.end());
        out_.push_back(std::move(sorted));
        if (static_cast<int>(out_.size()) > 20000000) {
            throw BudgetExceeded("more than 2e7 connected vertex sets");
        }
        if (static_cast<int>(sub_.size()) == N_) {
            return;
        }
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (int u : nbrs_[w]) {
                if (u > root && mark_[u] == 0) {
                    next.push_back(u);
                }
            }
            add(w);
            extend(next, root);
            remove(w);
        }
    }

    const Multigraph &g_;
    int N_;
    std::vector<int> mark_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> sub_;
    std::vector<std::vector<int>> out_;
};

// Weight of a connected set C in the normalized expansion:
// k^-|E(C)| sum over colorings of E(C) of prod_{v in C} D^v. Edges leaving C
// are summed out in advance into the vertex tensors.
class PolymerWeights {
public:
    PolymerWeights(const Multigraph &g, const TensorAssignment &D)
        : g_(g), D_(D), k_(D.colors()), local_(g.num_vertices(), -1)
    {
    }

    cplx operator()(const std::vector<int> &C)
    {
        for (std::size_t i = 0; i < C.size(); i++) {
            local_[C[i]] = static_cast<int>(i);
        }
        std::vector<int> touching;
        for (int v : C) {
            for (int e : g_.incidences(v)) {
                touching.push_back(e);
            }
        }
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

        OpenNetwork net;
        net.k = k_;
        std::vector<int> inside(C.size(), 0);
        for (int e : touching) {
            const Edge &edge = g_.edge(e);
            const int a = local_[edge.u], b = local_[edge.v];
            if (a >= 0 && b >= 0) {
                net.edges.emplace_back(a, b);
                inside[a]++;
                inside[b]++;
            }
        }
        net.fixed.assign(net.edges.size(), -1);
        for (std::size_t i = 0; i < C.size(); i++) {
            net.tensors.push_back(&summed(C[i], g_.degree(C[i]) - inside[i]));
        }
        for (int v : C) {
            local_[v] = -1;
        }
        cost_ += coloring_count(net);
        if (cost_ > budget()) {
            throw BudgetExceeded("cluster expansion exceeds the budget of " +
                                 std::to_string(budget()) + " terms");
        }
        const cplx value = contract(net, false);
        return value * std::pow(static_cast<double>(k_), -static_cast<double>(net.edges.size()));
    }

    void charge(std::uint64_t terms)
    {
        cost_ += terms;
        if (cost_ > budget()) {
            throw BudgetExceeded("cluster expansion exceeds the budget of " +
                                 std::to_string(budget()) + " terms");
        }
    }

private:
    // k^-j sum_{|gamma| = j} multinomial(gamma) D^v(beta + gamma).
    const VertexTensor &summed(int v, int j)
    {
        const auto key = std::make_pair(v, j);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        const VertexTensor &full = D_[v];
        const int d = full.degree() - j;
        VertexTensor out(k_, d);
        const std::vector<Alpha> gammas = multisets_of_total(k_, j);
        std::vector<double> weights;
        for (const Alpha &gamma : gammas) {
            weights.push_back(multinomial(gamma) * std::pow(static_cast<double>(k_), -j));
        }
        for (const Alpha &beta : out.support()) {
            cplx acc = 0.0;
            Alpha sum(k_);
            for (std::size_t i = 0; i < gammas.size(); i++) {
                for (int c = 0; c < k_; c++) {
                    sum[c] = beta[c] + gammas[i][c];
                }
                acc += weights[i] * full.at(sum);
            }
            out.set(beta, acc);
        }
        return cache_.emplace(key, std::move(out)).first->second;
    }

    const Multigraph &g_;
    const TensorAssignment &D_;
    int k_;
    std::vector<int> local_;
    std::map<std::pair<int, int>, VertexTensor> cache_;
    std::uint64_t cost_ = 0;
};

}  // namespace

std::vector<std::vector<int>> connected_sets(const Multigraph &g, int N)
{
    if (N <= 0) {
        return {};
    }
    return SetEnumerator(g, N).run();
}

std::vector<cplx> log_series_by_clusters(const Multigraph &g, const TensorAssignment &D, int N)
{
    std::vector<cplx> L(N + 1, cplx(0.0));
    if (N <= 0) {
        return L;
    }
    if (N > 24) {
        throw BudgetExceeded("cluster expansion limited to order 24");
    }
    std::vector<std::vector<int>> sets = connected_sets(g, N);
    std::stable_sort(sets.begin(), sets.end(),
                     [](const auto &a, const auto &b) { return a.size() < b.size(); });

    std::unordered_map<std::vector<int>, std::size_t, VectorHash> index;
    index.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); i++) {
        index.emplace(sets[i], i);
    }

    PolymerWeights weight(g, D);
    std::vector<cplx> w(sets.size());
    std::vector<std::vector<cplx>> phi(sets.size());

    for (std::size_t si = 0; si < sets.size(); si++) {
        const std::vector<int> &S = sets[si];
        const int s = static_cast<int>(S.size());
        weight.charge(1ULL << s);
        std::vector<std::uint32_t> adj(s, 0);
        for (int i = 0; i < s; i++) {
            for (int u : g.neighbours(S[i])) {
                const auto it = std::lower_bound(S.begin(), S.end(), u);
                if (it != S.end() && *it == u) {
                    adj[i] |= 1U << (it - S.begin());
                }
            }
        }
        auto members = [&](std::uint32_t mask) {
            std::vector<int> out;
            for (int i = 0; i < s; i++) {
                if (mask >> i & 1U) {
                    out.push_back(S[i]);
                }
            }
            return out;
        };

        const std::uint32_t full = (1U << s) - 1;
        std::vector<cplx> wU(std::size_t{1} << s, cplx(0.0));
        std::vector<std::uint32_t> connected;
        wU[0] = 1.0;
        for (std::uint32_t mask = 1; mask <= full; mask++) {
            std::uint32_t comp = mask & (~mask + 1);
            for (;;) {
                std::uint32_t grow = comp;
                for (int i = 0; i < s; i++) {
                    if (comp >> i & 1U) {
                        grow |= adj[i] & mask;
                    }
                }
                if (grow == comp) {
                    break;
                }
                comp = grow;
            }
            if (comp != mask) {
                wU[mask] = wU[comp] * wU[mask ^ comp];
            } else if (mask == full) {
                w[si] = weight(S);
                wU[mask] = w[si];
            } else {
                const std::size_t j = index.at(members(mask));
                wU[mask] = w[j];
                connected.push_back(j);
            }
        }

        std::vector<cplx> a(N + 1, cplx(0.0));
        a[0] = 1.0;
        for (std::uint32_t mask = 1; mask <= full; mask++) {
            a[std::popcount(mask)] += wU[mask];
        }
        std::vector<cplx> b(N + 1, cplx(0.0));
        for (int j = 1; j <= N; j++) {
            cplx acc = static_cast<double>(j) * a[j];
            for (int i = 1; i < j; i++) {
                acc -= static_cast<double>(i) * b[i] * a[j - i];
            }
            b[j] = acc / static_cast<double>(j);
        }
        for (std::size_t j : connected) {
            for (int i = 0; i <= N; i++) {
                b[i] -= phi[j][i];
            }
        }
        for (int i = 0; i <= N; i++) {
            L[i] += b[i];
        }
        phi[si] = std::move(b);
    }
    return L;
}

}  // namespace holant::detail
