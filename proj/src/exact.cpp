#include "holant/exact.hpp"

#include <Eigen/LU>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "holant/errors.hpp"
#include "holant/parallel.hpp"
#include "network.hpp"

namespace holant {

namespace {

std::uint64_t budget_from_env()
{
    if (const char *env = std::getenv("HOLANT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
        }
    }
    return 100000000ULL;
}

std::atomic<std::uint64_t> configured_budget{budget_from_env()};

void check_budget(std::uint64_t cost, const char *what)
{
    if (cost > budget()) {
        throw BudgetExceeded(std::string(what) + " needs " +
                             (cost == std::numeric_limits<std::uint64_t>::max()
                                  ? std::string("more than 2^64")
                                  : std::to_string(cost)) +
                             " terms, budget is " + std::to_string(budget()) +
                             "; use the approximation scheme or raise --budget");
    }
}

}  // namespace

std::uint64_t budget()
{
    return configured_budget;
}

void set_budget(std::uint64_t terms)
{
    configured_budget = terms;
}

namespace detail {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp)
{
    std::uint64_t out = 1;
    for (int i = 0; i < exp; i++) {
        out = sat_mul(out, base);
    }
    return out;
}

std::uint64_t coloring_count(const OpenNetwork &net)
{
    int free_edges = 0;
    for (int c : net.fixed) {
        free_edges += c < 0;
    }
    return sat_pow(static_cast<std::uint64_t>(net.k), free_edges);
}

OpenNetwork whole_graph(const Multigraph &g, const TensorAssignment &t)
{
    OpenNetwork net;
    net.k = t.colors();
    for (const Edge &e : g.edges()) {
        net.edges.emplace_back(e.u, e.v);
    }
    net.fixed.assign(net.edges.size(), -1);
    for (int v = 0; v < g.num_vertices(); v++) {
        net.tensors.push_back(&t[v]);
    }
    return net;
}

namespace {

class Contractor {
public:
    explicit Contractor(const OpenNetwork &net) : net_(net)
    {
        const int n = static_cast<int>(net.tensors.size());
        const std::size_t m = net.edges.size();
        idx_.assign(n, 0);
        closes_.resize(m);
        std::vector<int> last(n, -1);
        std::vector<int> ends(n, 0);
        for (std::size_t e = 0; e < m; e++) {
            for (int x : {net.edges[e].first, net.edges[e].second}) {
                if (x >= 0) {
                    last[x] = static_cast<int>(e);
                    ends[x]++;
                }
            }
        }
        start_ = 1.0;
        for (int v = 0; v < n; v++) {
            if (net.tensors[v]->degree() != ends[v] || net.tensors[v]->colors() != net.k) {
                throw PreconditionError("tensor at vertex " + std::to_string(v) + " has order " +
                                        std::to_string(net.tensors[v]->degree()) +
                                        " but the vertex has " + std::to_string(ends[v]) +
                                        " edge ends");
            }
            if (last[v] < 0) {
                start_ *= net.tensors[v]->raw(0);
            } else {
                closes_[last[v]].push_back(v);
            }
        }
    }

    std::size_t edges() const { return net_.edges.size(); }
    cplx start() const { return start_; }

    template <class Leaf>
    cplx walk(std::size_t e, cplx prefix, std::size_t split, Leaf &leaf)
    {
        if (e == split) {
            return leaf(prefix);
        }
        const int fixed = net_.fixed[e];
        const int lo = fixed < 0 ? 0 : fixed;
        const int hi = fixed < 0 ? net_.k : fixed + 1;
        cplx acc = 0.0;
        for (int c = lo; c < hi; c++) {
            shift(e, c, true);
            cplx p = prefix;
            for (int v : closes_[e]) {
                p *= net_.tensors[v]->raw(idx_[v]);
            }
            if (p != cplx(0.0)) {
                acc += walk(e + 1, p, split, leaf);
            }
            shift(e, c, false);
        }
        return acc;
    }

    cplx descend(std::size_t e, cplx prefix)
    {
        auto identity = [](cplx p) { return p; };
        return walk(e, prefix, edges(), identity);
    }

    std::vector<std::size_t> &state() { return idx_; }

private:
    void shift(std::size_t e, int c, bool forward)
    {
        for (int x : {net_.edges[e].first, net_.edges[e].second}) {
            if (x >= 0) {
                const std::size_t s = net_.tensors[x]->indexer().stride(c);
                idx_[x] = forward ? idx_[x] + s : idx_[x] - s;
            }
        }
    }

    const OpenNetwork &net_;
    std::vector<std::size_t> idx_;
    std::vector<std::vector<int>> closes_;
    cplx start_;
};

}  // namespace

cplx contract(const OpenNetwork &net, bool allow_parallel)
{
    Contractor top(net);
    const std::uint64_t count = coloring_count(net);
    const unsigned workers = allow_parallel ? threads() : 1;
    if (workers <= 1 || count < 4096) {
        return top.descend(0, top.start());
    }
    // Split after the first `split` edges; every task resumes the serial walk
    // from its prefix and the top of the tree is re-walked to combine them.
    std::size_t split = 0;
    std::uint64_t tasks = 1;
    while (split < top.edges() && tasks < 16ULL * workers) {
        if (net.fixed[split] < 0) {
            tasks *= net.k;
        }
        split++;
    }
    struct Task {
        std::vector<std::size_t> idx;
        cplx prefix;
    };
    std::vector<Task> pending;
    auto collect = [&](cplx p) {
        pending.push_back({top.state(), p});
        return cplx(0.0);
    };
    top.walk(0, top.start(), split, collect);
    std::vector<cplx> results = parallel_map(pending.size(), [&](std::size_t i) {
        Contractor worker(net);
        worker.state() = pending[i].idx;
        return worker.descend(split, pending[i].prefix);
    });
    std::size_t next = 0;
    auto combine = [&](cplx) { return results[next++]; };
    return top.walk(0, top.start(), split, combine);
}

}  // namespace detail

cplx contract_network(const Multigraph &g, const TensorAssignment &t)
{
    t.check_against(g);
    const detail::OpenNetwork net = detail::whole_graph(g, t);
    check_budget(detail::coloring_count(net), "exact contraction");
    return detail::contract(net);
}

cplx exact_partition(const Multigraph &g, const EdgeColoringModel &h)
{
    check_budget(detail::sat_pow(h.colors(), g.num_edges()), "exact_partition");
    return contract_network(g, TensorAssignment::from_model(g, h));
}

cplx restricted_partition(const Multigraph &g, const TensorAssignment &t,
                          const RestrictedSpec &r)
{
    t.check_against(g);
    if (r.F.size() != r.phi.size()) {
        throw PreconditionError("restricted spec: F and phi differ in size");
    }
    detail::OpenNetwork net = detail::whole_graph(g, t);
    for (std::size_t i = 0; i < r.F.size(); i++) {
        const int e = r.F[i];
        if (e < 0 || e >= g.num_edges()) {
            throw PreconditionError("restricted spec: edge " + std::to_string(e) +
                                    " is not an edge of the graph");
        }
        if (r.phi[i] < 0 || r.phi[i] >= t.colors()) {
            throw PreconditionError("restricted spec: color " + std::to_string(r.phi[i]) +
                                    " out of range");
        }
        if (net.fixed[e] >= 0 && net.fixed[e] != r.phi[i]) {
            throw PreconditionError("restricted spec: edge " + std::to_string(e) +
                                    " listed twice with different colors");
        }
        net.fixed[e] = r.phi[i];
    }
    check_budget(detail::coloring_count(net), "restricted_partition");
    return detail::contract(net);
}

cplx vertex_partition(const Multigraph &g, const VertexModel &model)
{
    const int n = model.size();
    const int nv = g.num_vertices();
    check_budget(detail::sat_pow(n, nv), "vertex_partition");
    std::vector<int> c(nv, 0);
    cplx total = 0.0;
    for (;;) {
        cplx term = 1.0;
        for (int v = 0; v < nv; v++) {
            term *= model.a(c[v]);
        }
        for (const Edge &e : g.edges()) {
            term *= model.B(c[e.u], c[e.v]);
        }
        total += term;
        int v = nv - 1;
        while (v >= 0 && ++c[v] == n) {
            c[v] = 0;
            v--;
        }
        if (v < 0) {
            break;
        }
    }
    return total;
}

TensorAssignment interpolate_tensors(const TensorAssignment &h, cplx z)
{
    TensorAssignment out = h;
    for (int v = 0; v < out.size(); v++) {
        VertexTensor &t = out[v];
        for (std::size_t i = 0; i < t.indexer().size(); i++) {
            t.raw(i) = 1.0 + z * (t.raw(i) - 1.0);
        }
    }
    return out;
}

ComplexPoly exact_poly_by_interpolation(const Multigraph &g, const EdgeColoringModel &h)
{
    check_budget(detail::sat_pow(h.colors(), g.num_edges()), "exact_poly_by_interpolation");
    return exact_poly_by_interpolation(g, TensorAssignment::from_model(g, h));
}

ComplexPoly exact_poly_by_interpolation(const Multigraph &g, const TensorAssignment &h)
{
    using lcplx = std::complex<long double>;
    using LMatrix = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;
    using LVector = Eigen::Matrix<lcplx, Eigen::Dynamic, 1>;

    h.check_against(g);
    const int n = g.num_vertices();
    std::vector<cplx> values(n + 1);
    for (int j = 0; j <= n; j++) {
        values[j] = contract_network(g, interpolate_tensors(h, static_cast<double>(j)));
    }
    bool constant = true;
    for (const cplx &v : values) {
        constant = constant && v == values[0];
    }
    if (constant) {
        return ComplexPoly({values[0]});
    }

    LMatrix V(n + 1, n + 1);
    LVector rhs(n + 1);
    for (int j = 0; j <= n; j++) {
        long double power = 1.0L;
        for (int i = 0; i <= n; i++) {
            V(j, i) = power;
            power *= j;
        }
        rhs(j) = lcplx(values[j].real(), values[j].imag());
    }
    const LVector sol = V.fullPivLu().solve(rhs);
    std::vector<cplx> coeffs(n + 1);
    for (int i = 0; i <= n; i++) {
        coeffs[i] = cplx(static_cast<double>(sol(i).real()), static_cast<double>(sol(i).imag()));
    }
    ComplexPoly q(coeffs);

    double scale = 0.0;
    for (const cplx &v : values) {
        scale = std::max(scale, std::abs(v));
    }
    for (int j = 0; j <= n; j++) {
        const double residual = std::abs(q(static_cast<double>(j)) - values[j]);
        if (residual > 1e-8 * scale) {
            throw ConvergenceError("interpolation residual " + std::to_string(residual) +
                                   " at node " + std::to_string(j));
        }
    }
    return q;
}

}  // namespace holant
