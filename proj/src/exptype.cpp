#include "holant/exptype.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/exact.hpp"
#include "network.hpp"

namespace holant {

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

void check_subset_budget(const Multigraph &g, const char *what)
{
    if (g.num_edges() > 62 || (std::uint64_t{1} << g.num_edges()) > budget()) {
        throw BudgetExceeded(std::string(what) + " enumerates 2^" +
                             std::to_string(g.num_edges()) + " edge subsets, budget is " +
                             std::to_string(budget()));
    }
}

// counts[c][j]: number of edge subsets with c components and j edges.
std::vector<std::vector<double>> component_counts(const Multigraph &g)
{
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<std::vector<double>> counts(n + 1, std::vector<double>(m + 1, 0.0));
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << m); A++) {
        UnionFind uf(n);
        int components = n;
        int size = 0;
        for (int e = 0; e < m; e++) {
            if (A >> e & 1U) {
                size++;
                components -= uf.unite(g.edge(e).u, g.edge(e).v);
            }
        }
        counts[components][size] += 1.0;
    }
    return counts;
}

// chi(G[U]) with the vertex list as cache key.
class ChiCache {
public:
    ChiCache(const Multigraph &g, const ExpTypeSpec &spec) : g_(g), spec_(spec) {}

    cplx operator()(const std::vector<int> &U)
    {
        auto it = cache_.find(U);
        if (it != cache_.end()) {
            return it->second;
        }
        const cplx value = spec_.chi(induced_subgraph(g_, U));
        cache_.emplace(U, value);
        return value;
    }

private:
    const Multigraph &g_;
    const ExpTypeSpec &spec_;
    std::map<std::vector<int>, cplx> cache_;
};

void require_chi(const ExpTypeSpec &spec)
{
    if (!spec.chi) {
        throw PreconditionError("exponential-type spec '" + spec.name + "' has no chi");
    }
}

void partitions_rec(std::vector<int> &a, std::vector<int> &sizes, int i, int n, int blocks,
                    int min_block, const std::function<void(const std::vector<int> &)> &visit)
{
    const int used = static_cast<int>(sizes.size());
    if (i == n) {
        if (blocks >= 0 && used != blocks) {
            return;
        }
        for (int s : sizes) {
            if (s < min_block) {
                return;
            }
        }
        visit(a);
        return;
    }
    if (blocks >= 0 && used + (n - i) < blocks) {
        return;
    }
    // Elements still needed to bring undersized blocks up to min_block.
    int deficit = 0;
    for (int s : sizes) {
        deficit += std::max(0, min_block - s);
    }
    if (deficit > n - i) {
        return;
    }
    for (int b = 0; b <= used; b++) {
        if (b == used) {
            if (blocks >= 0 && used == blocks) {
                break;
            }
            sizes.push_back(0);
        }
        a[i] = b;
        sizes[b]++;
        partitions_rec(a, sizes, i + 1, n, blocks, min_block, visit);
        sizes[b]--;
        if (b == used) {
            sizes.pop_back();
        }
    }
}

std::vector<std::vector<int>> blocks_of(const std::vector<int> &rgs, const std::vector<int> &labels)
{
    const int count = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(count);
    for (std::size_t i = 0; i < rgs.size(); i++) {
        blocks[rgs[i]].push_back(labels[i]);
    }
    return blocks;
}

}  // namespace

cplx chi_tutte(const Multigraph &g, cplx v)
{
    check_subset_budget(g, "chi_tutte");
    if (g.num_vertices() == 0) {
        return 0.0;
    }
    const auto counts = component_counts(g);
    cplx acc = 0.0;
    for (int j = 0; j <= g.num_edges(); j++) {
        acc += counts[1][j] * ipow(v, j);
    }
    return acc;
}

ExpTypeSpec tutte_spec(cplx v)
{
    ExpTypeSpec spec;
    spec.chi = [v](const Multigraph &g) { return chi_tutte(g, v); };
    std::ostringstream name;
    name.precision(17);
    name << "tutte:v=" << v.real() << "," << v.imag();
    spec.name = name.str();
    return spec;
}

ExpTypeSpec chromatic_spec()
{
    ExpTypeSpec spec = tutte_spec(-1.0);
    spec.name = "chromatic";
    return spec;
}

ExpTypeSpec parse_exptype_spec(const std::string &text)
{
    if (text == "chromatic") {
        return chromatic_spec();
    }
    const std::string prefix = "tutte:v=";
    if (text.rfind(prefix, 0) == 0) {
        const std::string rest = text.substr(prefix.size());
        const auto comma = rest.find(',');
        try {
            std::size_t used = 0;
            const double re = std::stod(rest.substr(0, comma), &used);
            double im = 0.0;
            if (comma != std::string::npos) {
                std::size_t used_im = 0;
                const std::string tail = rest.substr(comma + 1);
                im = std::stod(tail, &used_im);
                if (used_im != tail.size()) {
                    throw ParseError("trailing characters");
                }
            } else if (used != rest.size()) {
                throw ParseError("trailing characters");
            }
            return tutte_spec(cplx(re, im));
        } catch (const std::exception &) {
        }
    }
    throw ParseError("unknown exponential-type spec '" + text +
                     "' (expected tutte:v=<re>,<im> or chromatic)");
}

cplx tutte_direct(const Multigraph &g, cplx q, cplx v)
{
    check_subset_budget(g, "tutte_direct");
    const auto counts = component_counts(g);
    cplx acc = 0.0;
    for (int c = 0; c <= g.num_vertices(); c++) {
        for (int j = 0; j <= g.num_edges(); j++) {
            if (counts[c][j] != 0.0) {
                acc += counts[c][j] * ipow(q, c) * ipow(v, j);
            }
        }
    }
    return acc;
}

std::vector<cplx> chi_k_coefficients(const Multigraph &g, const ExpTypeSpec &spec)
{
    require_chi(spec);
    const int n = g.num_vertices();
    if (n > 20 || detail::sat_pow(3, n) > budget()) {
        throw BudgetExceeded("chi_k_coefficients over " + std::to_string(n) +
                             " vertices exceeds the budget");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<cplx> chi(full + 1, cplx(0.0));
    for (std::uint32_t mask = 1; mask <= full; mask++) {
        std::vector<int> U;
        for (int i = 0; i < n; i++) {
            if (mask >> i & 1U) {
                U.push_back(i);
            }
        }
        chi[mask] = spec.chi(induced_subgraph(g, U));
    }
    // F[k][mask]: sum over partitions of mask into k blocks of prod chi.
    std::vector<std::vector<cplx>> F(n + 1, std::vector<cplx>(full + 1, cplx(0.0)));
    F[0][0] = 1.0;
    for (int k = 1; k <= n; k++) {
        for (std::uint32_t mask = 1; mask <= full; mask++) {
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ low;
            cplx acc = 0.0;
            // Blocks containing the lowest element of mask: low | sub for sub
            // ranging over the subsets of rest.
            std::uint32_t sub = 0;
            for (;;) {
                const std::uint32_t block = low | sub;
                if (F[k - 1][mask ^ block] != cplx(0.0)) {
                    acc += chi[block] * F[k - 1][mask ^ block];
                }
                if (sub == rest) {
                    break;
                }
                sub = (sub - rest) & rest;
            }
            F[k][mask] = acc;
        }
    }
    std::vector<cplx> out(n + 1);
    for (int k = 0; k <= n; k++) {
        out[k] = F[k][full];
    }
    return out;
}

ComplexPoly exp_type_poly(const Multigraph &g, const ExpTypeSpec &spec)
{
    return ComplexPoly(chi_k_coefficients(g, spec));
}

void for_each_set_partition(int n, int blocks, int min_block,
                            const std::function<void(const std::vector<int> &)> &visit)
{
    std::vector<int> a(n, 0);
    std::vector<int> sizes;
    partitions_rec(a, sizes, 0, n, blocks, std::max(1, min_block), visit);
}

cplx qhat_derivative(const Multigraph &g, const ExpTypeSpec &spec, int m)
{
    require_chi(spec);
    const int n = g.num_vertices();
    if (m < 0 || m > n) {
        throw PreconditionError("qhat_derivative needs 0 <= m <= |V|");
    }
    ChiCache chi(g, spec);
    std::vector<cplx> single(n);
    for (int v = 0; v < n; v++) {
        single[v] = chi({v});
    }
    if (m == 0) {
        cplx acc = 1.0;
        for (const cplx &s : single) {
            acc *= s;
        }
        return acc;
    }
    std::uint64_t work = 0;
    cplx total = 0.0;
    // Supports S of the non-singleton blocks: |S| = s, split into s - m blocks
    // of size >= 2, so m < s <= 2m.
    for (int s = m + 1; s <= std::min(2 * m, n); s++) {
        const int blocks = s - m;
        std::vector<int> S(s);
        std::iota(S.begin(), S.end(), 0);
        for (;;) {
            std::vector<bool> in(n, false);
            for (int v : S) {
                in[v] = true;
            }
            cplx outside = 1.0;
            for (int v = 0; v < n; v++) {
                if (!in[v]) {
                    outside *= single[v];
                }
            }
            if (outside != cplx(0.0)) {
                for_each_set_partition(s, blocks, 2, [&](const std::vector<int> &rgs) {
                    if (++work > budget()) {
                        throw BudgetExceeded("qhat_derivative exceeds the budget");
                    }
                    cplx term = outside;
                    for (const auto &block : blocks_of(rgs, S)) {
                        term *= chi(block);
                    }
                    total += term;
                });
            }
            int i = s - 1;
            while (i >= 0 && S[i] == n - s + i) {
                i--;
            }
            if (i < 0) {
                break;
            }
            S[i]++;
            for (int j = i + 1; j < s; j++) {
                S[j] = S[j - 1] + 1;
            }
        }
    }
    return factorial(m) * total;
}

cplx qhat_derivative_bruteforce(const Multigraph &g, const ExpTypeSpec &spec, int m)
{
    require_chi(spec);
    const int n = g.num_vertices();
    if (m < 0 || m > n) {
        throw PreconditionError("qhat_derivative needs 0 <= m <= |V|");
    }
    ChiCache chi(g, spec);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::uint64_t work = 0;
    cplx total = 0.0;
    for_each_set_partition(n, n - m, 1, [&](const std::vector<int> &rgs) {
        if (++work > budget()) {
            throw BudgetExceeded("qhat_derivative_bruteforce exceeds the budget");
        }
        cplx term = 1.0;
        for (const auto &block : blocks_of(rgs, labels)) {
            term *= chi(block);
        }
        total += term;
    });
    return factorial(m) * total;
}

ApproxCertificate eval_exp_type(const Multigraph &g, const ExpTypeSpec &spec, cplx x, double eps,
                                ApproxMode mode)
{
    require_chi(spec);
    if (!spec.root_radius) {
        throw PreconditionError("spec '" + spec.name +
                                "' has no root radius; supply c or run estimate_root_radius");
    }
    const double c = *spec.root_radius;
    if (!(std::abs(x) > c)) {
        throw OutsideRegionError("|x| = " + std::to_string(std::abs(x)) +
                                 " is not above the root radius c = " + std::to_string(c));
    }
    if (spec.chi(Multigraph(1)) != cplx(1.0)) {
        throw PreconditionError("chi(K_1) must be 1 for the monic transform");
    }
    const int n = g.num_vertices();
    ApproxCertificate cert;
    cert.mode = mode;
    cert.degree = n;
    cert.heuristic_radius = spec.heuristic_radius;
    cert.M = c == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / c;
    cert.q0 = c / std::abs(x);
    cert.n = taylor_order(n, cert.q0, eps, mode);
    cert.bound = taylor_bound(n, cert.q0, cert.n);

    std::vector<cplx> derivs(cert.n + 1, cplx(0.0));
    for (int m = 0; m <= std::min(cert.n, n); m++) {
        derivs[m] = qhat_derivative(g, spec, m);
    }
    const LogDerivatives f = log_derivatives_from_p(derivs, cert.n);
    const cplx T = f.taylor(1.0 / x, cert.n);
    cert.log_value = static_cast<double>(n) * std::log(x) + T;
    cert.value = mode == ApproxMode::Multiplicative
                     ? ipow(x, n) * std::exp(T)
                     : cplx(T.real() + n * std::log(std::abs(x)));
    return cert;
}

RootRadiusEstimate estimate_root_radius(const ExpTypeSpec &spec, int max_degree,
                                        const std::vector<Multigraph> &samples)
{
    RootRadiusEstimate est;
    double largest = 0.0;
    for (const Multigraph &g : samples) {
        if (g.max_degree() > max_degree || g.num_vertices() == 0) {
            continue;
        }
        est.graphs_used++;
        const ComplexPoly p = exp_type_poly(g, spec);
        if (p.degree() < 1) {
            continue;
        }
        for (const cplx &z : poly_roots(p)) {
            largest = std::max(largest, std::abs(z));
        }
    }
    est.radius = 1.5 * largest;
    return est;
}

}  // namespace holant
