#include "holant/models.hpp"

#include <cmath>
#include <numbers>

#include "holant/errors.hpp"

namespace holant {

// ---------------------------------------------------------------------------
// EdgeColoringModel

EdgeColoringModel::EdgeColoringModel(int k, cplx default_value) : k_(k), default_(default_value)
{
    if (k < 1) {
        throw PreconditionError("edge-coloring model needs at least one color");
    }
}

EdgeColoringModel::EdgeColoringModel(int k, Rule rule) : EdgeColoringModel(k, 0.0)
{
    rule_ = std::move(rule);
}

EdgeColoringModel EdgeColoringModel::constant(int k, cplx c)
{
    return EdgeColoringModel(k, c);
}

int EdgeColoringModel::max_alpha_norm() const
{
    int m = 0;
    for (const auto &[alpha, _] : entries_) {
        m = std::max(m, total(alpha));
    }
    return m;
}

void EdgeColoringModel::check_alpha(const Alpha &alpha) const
{
    if (static_cast<int>(alpha.size()) != k_) {
        throw PreconditionError("multiset has " + std::to_string(alpha.size()) +
                                " coordinates, model has " + std::to_string(k_) + " colors");
    }
    for (int a : alpha) {
        if (a < 0) {
            throw PreconditionError("multiset with negative entry");
        }
    }
}

void EdgeColoringModel::set(const Alpha &alpha, cplx value)
{
    check_alpha(alpha);
    entries_[alpha] = value;
}

cplx EdgeColoringModel::value(const Alpha &alpha) const
{
    check_alpha(alpha);
    if (auto it = entries_.find(alpha); it != entries_.end()) {
        return it->second;
    }
    if (rule_) {
        return rule_(alpha);
    }
    return default_;
}

EdgeColoringModel EdgeColoringModel::materialized(int degree) const
{
    EdgeColoringModel out(k_, default_);
    for (const auto &alpha : multisets_up_to(k_, degree)) {
        out.entries_[alpha] = value(alpha);
    }
    for (const auto &[alpha, v] : entries_) {
        out.entries_[alpha] = v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensors

VertexTensor::VertexTensor(int k, int degree, cplx fill)
    : index_(k, degree), values_(index_.size(), fill)
{
}

cplx VertexTensor::at(const Alpha &alpha) const
{
    if (static_cast<int>(alpha.size()) != colors() || total(alpha) != degree()) {
        throw PreconditionError("tensor of order " + std::to_string(degree()) +
                                " evaluated on a multiset of the wrong size");
    }
    return values_[index_.index(alpha)];
}

void VertexTensor::set(const Alpha &alpha, cplx value)
{
    if (static_cast<int>(alpha.size()) != colors() || total(alpha) != degree()) {
        throw PreconditionError("tensor of order " + std::to_string(degree()) +
                                " assigned on a multiset of the wrong size");
    }
    values_[index_.index(alpha)] = value;
}

TensorAssignment::TensorAssignment(int k, std::vector<VertexTensor> tensors)
    : k_(k), tensors_(std::move(tensors))
{
    for (const auto &t : tensors_) {
        if (t.colors() != k) {
            throw PreconditionError("tensor assignment mixes color counts");
        }
    }
}

TensorAssignment TensorAssignment::from_model(const Multigraph &g, const EdgeColoringModel &h)
{
    const int k = h.colors();
    // Vertices of equal degree share one tensor.
    std::map<int, VertexTensor> by_degree;
    std::vector<VertexTensor> tensors;
    tensors.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        const int d = g.degree(v);
        auto it = by_degree.find(d);
        if (it == by_degree.end()) {
            VertexTensor t(k, d);
            for (const auto &alpha : multisets_of_total(k, d)) {
                t.set(alpha, h.value(alpha));
            }
            it = by_degree.emplace(d, std::move(t)).first;
        }
        tensors.push_back(it->second);
    }
    return TensorAssignment(k, std::move(tensors));
}

TensorAssignment TensorAssignment::constant(const Multigraph &g, int k, cplx c)
{
    std::vector<VertexTensor> tensors;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        tensors.emplace_back(k, g.degree(v), c);
    }
    return TensorAssignment(k, std::move(tensors));
}

void TensorAssignment::check_against(const Multigraph &g) const
{
    if (size() != g.num_vertices()) {
        throw PreconditionError("tensor assignment has " + std::to_string(size()) +
                                " tensors for a graph with " +
                                std::to_string(g.num_vertices()) + " vertices");
    }
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (tensors_[v].degree() != g.degree(v)) {
            throw PreconditionError("tensor at vertex " + std::to_string(v) + " has order " +
                                    std::to_string(tensors_[v].degree()) + " but deg(v) = " +
                                    std::to_string(g.degree(v)));
        }
    }
}

double TensorAssignment::deviation_from_ones() const
{
    double r = 0.0;
    for (const auto &t : tensors_) {
        for (const auto &alpha : t.support()) {
            r = std::max(r, std::abs(t.at(alpha) - 1.0));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

VertexModel::VertexModel(CVector a_in, CMatrix B_in) : a(std::move(a_in)), B(std::move(B_in))
{
    const auto n = a.size();
    if (B.rows() != n || B.cols() != n) {
        throw PreconditionError("vertex model: B must be n x n with n = |a|");
    }
    for (Eigen::Index i = 0; i < n; i++) {
        if (a(i) == 0.0) {
            throw PreconditionError("vertex model: vertex weights must be nonzero");
        }
        for (Eigen::Index j = 0; j < n; j++) {
            if (B(i, j) != B(j, i)) {
                throw PreconditionError("vertex model: B must be symmetric");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// RegionParams

RegionParams::RegionParams(double delta, double eta, double theta, double beta)
    : delta_(delta), eta_(eta), theta_(theta), beta_(beta)
{
    if (!(delta > 0.0) || !(eta > 0.0)) {
        throw PreconditionError("region: delta and eta must be positive");
    }
    if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi / 3.0)) {
        throw PreconditionError("region: theta must lie in (0, 2 pi/3)");
    }
    const double cap = eta * theta * std::cos(theta / 2.0);
    if (beta > cap) {
        throw PreconditionError("region: beta = " + std::to_string(beta) +
                                " exceeds eta*theta*cos(theta/2) = " + std::to_string(cap));
    }
}

RegionParams RegionParams::for_degree(int max_degree, double eta, double theta)
{
    const double beta = eta * theta * std::cos(theta / 2.0);
    const double delta = std::min(eta, beta / (max_degree + 1));
    return RegionParams(delta, eta, theta, beta);
}

void RegionParams::check_for_degree(int max_degree) const
{
    const double cap = std::min(eta_, beta_ / (max_degree + 1));
    if (delta_ > cap) {
        throw PreconditionError("region: delta = " + std::to_string(delta_) +
                                " exceeds min(eta, beta/(Delta+1)) = " + std::to_string(cap));
    }
}

bool RegionParams::contains(const VertexTensor &t) const
{
    const auto support = t.support();
    std::vector<cplx> vals;
    vals.reserve(support.size());
    for (const auto &alpha : support) {
        vals.push_back(t.at(alpha));
    }
    for (std::size_t i = 0; i < vals.size(); i++) {
        if (std::abs(vals[i]) < eta_) {
            return false;
        }
        for (std::size_t j = i + 1; j < vals.size(); j++) {
            if (!(std::abs(vals[i] - vals[j]) < delta_)) {
                return false;
            }
        }
    }
    return true;
}

bool RegionParams::contains(const TensorAssignment &t) const
{
    for (const auto &tensor : t.tensors()) {
        if (!contains(tensor)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Constructors

EdgeColoringModel model_from_predicate(PredicateKind kind, int k, int d)
{
    if (k != 2) {
        throw PreconditionError("predicate models are two-color models");
    }
    if (kind == PredicateKind::Matching) {
        return EdgeColoringModel(2, [](const Alpha &a) { return cplx(a[0] <= 1 ? 1.0 : 0.0); });
    }
    if (d < 0) {
        throw PreconditionError("d-regular model needs d >= 0");
    }
    return EdgeColoringModel(2, [d](const Alpha &a) { return cplx(a[0] == d ? 1.0 : 0.0); });
}

EdgeColoringModel rank_one_model(const CVector &x)
{
    const int k = static_cast<int>(x.size());
    std::vector<cplx> xs(x.data(), x.data() + k);
    return EdgeColoringModel(k, [xs](const Alpha &a) {
        cplx out = 1.0;
        for (std::size_t j = 0; j < xs.size(); j++) {
            out *= ipow(xs[j], a[j]);
        }
        return out;
    });
}

EdgeColoringModel vertex_to_edge(const CVector &a, const CMatrix &U)
{
    if (U.cols() != a.size()) {
        throw PreconditionError("vertex_to_edge: U must have one column per vertex weight");
    }
    const int k = static_cast<int>(U.rows());
    CMatrix Uc = U;
    CVector ac = a;
    return EdgeColoringModel(k, [Uc, ac](const Alpha &alpha) {
        cplx sum = 0.0;
        for (Eigen::Index i = 0; i < Uc.cols(); i++) {
            cplx term = ac(i);
            for (Eigen::Index j = 0; j < Uc.rows(); j++) {
                term *= ipow(Uc(j, i), alpha[j]);
            }
            sum += term;
        }
        return sum;
    });
}

EdgeColoringModel vertex_to_edge(const VertexModel &model)
{
    return vertex_to_edge(model.a, symmetric_decompose(model.B));
}

// ---------------------------------------------------------------------------
// Orthogonal action

VertexTensor apply_orthogonal(const CMatrix &g, const VertexTensor &h)
{
    const int k = h.colors();
    const int d = h.degree();
    if (g.rows() != k || g.cols() != k) {
        throw PreconditionError("apply_orthogonal: g must be k x k");
    }
    const auto &ix = h.indexer();
    VertexTensor out(k, d);
    std::vector<cplx> poly(ix.size()), next(ix.size());
    for (const auto &alpha : h.support()) {
        // Expand prod_j (sum_l g_{jl} x_l)^{alpha_j} one linear factor at a time.
        std::fill(poly.begin(), poly.end(), cplx(0.0));
        poly[0] = 1.0;
        for (int j = 0; j < k; j++) {
            for (int rep = 0; rep < alpha[j]; rep++) {
                std::fill(next.begin(), next.end(), cplx(0.0));
                for (std::size_t i = 0; i < poly.size(); i++) {
                    if (poly[i] == 0.0) {
                        continue;
                    }
                    for (int l = 0; l < k; l++) {
                        next[i + ix.stride(l)] += poly[i] * g(j, l);
                    }
                }
                std::swap(poly, next);
            }
        }
        cplx value = 0.0;
        for (std::size_t i = 0; i < poly.size(); i++) {
            if (poly[i] != 0.0) {
                value += poly[i] * h.raw(i);
            }
        }
        out.set(alpha, value);
    }
    return out;
}

EdgeColoringModel apply_orthogonal(const CMatrix &g, const EdgeColoringModel &h, int degree_bound)
{
    const int k = h.colors();
    EdgeColoringModel out(k, 0.0);
    for (int d = 0; d <= degree_bound; d++) {
        VertexTensor t(k, d);
        for (const auto &alpha : t.support()) {
            t.set(alpha, h.value(alpha));
        }
        auto gt = apply_orthogonal(g, t);
        for (const auto &alpha : gt.support()) {
            out.set(alpha, gt.at(alpha));
        }
    }
    return out;
}

TensorAssignment apply_orthogonal(const CMatrix &g, const TensorAssignment &h)
{
    std::vector<VertexTensor> tensors;
    tensors.reserve(h.size());
    for (const auto &t : h.tensors()) {
        tensors.push_back(apply_orthogonal(g, t));
    }
    return TensorAssignment(h.colors(), std::move(tensors));
}

}  // namespace holant
