#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "holant/graph.hpp"
#include "holant/multiset.hpp"

namespace holant {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// A k-color edge-coloring model h : N^k -> C.
///
/// Stored sparsely: explicit entries first, then an optional rule, then a
/// constant default. Total on N^k.
class EdgeColoringModel {
public:
    using Rule = std::function<cplx(const Alpha &)>;

    explicit EdgeColoringModel(int k, cplx default_value = 0.0);
    EdgeColoringModel(int k, Rule rule);

    /// h == c everywhere (h == 1 is the all-ones model I).
    static EdgeColoringModel constant(int k, cplx c);

    int colors() const { return k_; }
    cplx default_value() const { return default_; }
    const std::map<Alpha, cplx> &entries() const { return entries_; }
    bool has_rule() const { return static_cast<bool>(rule_); }

    /// Largest |alpha| among the explicit entries (0 when there are none).
    int max_alpha_norm() const;

    void set(const Alpha &alpha, cplx value);
    cplx value(const Alpha &alpha) const;
    cplx operator()(const Alpha &alpha) const { return value(alpha); }

    /// Copy with every alpha of total at most `degree` listed explicitly and
    /// the rule dropped.
    EdgeColoringModel materialized(int degree) const;

private:
    void check_alpha(const Alpha &alpha) const;

    int k_;
    std::map<Alpha, cplx> entries_;
    Rule rule_;
    cplx default_;
};

/// h^v : N^k_d -> C stored densely (see MultisetIndexer).
class VertexTensor {
public:
    VertexTensor() = default;
    VertexTensor(int k, int degree, cplx fill = 0.0);

    int colors() const { return index_.colors(); }
    int degree() const { return index_.degree(); }
    const MultisetIndexer &indexer() const { return index_; }

    cplx at(const Alpha &alpha) const;
    void set(const Alpha &alpha, cplx value);

    cplx raw(std::size_t i) const { return values_[i]; }
    cplx &raw(std::size_t i) { return values_[i]; }

    /// Every alpha with |alpha| = degree, lexicographic.
    std::vector<Alpha> support() const { return multisets_of_total(colors(), degree()); }

private:
    MultisetIndexer index_;
    std::vector<cplx> values_;
};

/// One tensor per vertex of an associated graph; tensor v has order deg(v).
class TensorAssignment {
public:
    TensorAssignment() = default;
    TensorAssignment(int k, std::vector<VertexTensor> tensors);

    /// h^v = h restricted to N^k_{deg(v)} for every v.
    static TensorAssignment from_model(const Multigraph &g, const EdgeColoringModel &h);
    static TensorAssignment constant(const Multigraph &g, int k, cplx c);

    int colors() const { return k_; }
    int size() const { return static_cast<int>(tensors_.size()); }
    const VertexTensor &operator[](int v) const { return tensors_[v]; }
    VertexTensor &operator[](int v) { return tensors_[v]; }
    const std::vector<VertexTensor> &tensors() const { return tensors_; }

    /// Throws PreconditionError unless tensor v has order deg(v) for all v.
    void check_against(const Multigraph &g) const;

    /// max over v and alpha of |h^v(alpha) - 1|.
    double deviation_from_ones() const;

private:
    int k_ = 2;
    std::vector<VertexTensor> tensors_;
};

/// Vertex-coloring model (a, B): a_i != 0, B complex symmetric.
struct VertexModel {
    CVector a;
    CMatrix B;

    VertexModel(CVector a, CMatrix B);
    int size() const { return static_cast<int>(a.size()); }
};

/// Zero-free region parameters (delta, eta, theta, beta).
class RegionParams {
public:
    /// Throws PreconditionError unless delta, eta > 0, theta in (0, 2 pi/3)
    /// and beta <= eta * theta * cos(theta/2).
    RegionParams(double delta, double eta, double theta, double beta);

    /// beta = eta * theta * cos(theta/2), delta = min(eta, beta / (max_degree + 1)).
    static RegionParams for_degree(int max_degree, double eta, double theta);

    double delta() const { return delta_; }
    double eta() const { return eta_; }
    double theta() const { return theta_; }
    double beta() const { return beta_; }

    /// Throws PreconditionError unless delta <= min(eta, beta/(max_degree+1)).
    void check_for_degree(int max_degree) const;

    /// Membership of a single tensor in S_d(delta, eta).
    bool contains(const VertexTensor &t) const;
    bool contains(const TensorAssignment &t) const;

private:
    double delta_, eta_, theta_, beta_;
};

// ---------------------------------------------------------------------------

enum class PredicateKind { Matching, DRegular };

/// Matching: h(alpha) = 1 iff alpha_1 <= 1. d-regular: h(alpha) = 1 iff
/// alpha_1 = d. Both two-color models.
EdgeColoringModel model_from_predicate(PredicateKind kind, int k = 2, int d = 0);

/// h_x(alpha) = prod_j x_j^alpha_j.
EdgeColoringModel rank_one_model(const CVector &x);

/// h_{a,U}(alpha) = sum_i a_i prod_j U(j,i)^alpha_j for a k x n matrix U;
/// evaluated lazily.
EdgeColoringModel vertex_to_edge(const CVector &a, const CMatrix &U);

/// As above with U = symmetric_decompose(model.B).
EdgeColoringModel vertex_to_edge(const VertexModel &model);

/// Some U with U^T U = B (at least two rows; rows beyond rank(B) are zero).
/// Complex-symmetric elimination with diagonal pivoting and 2x2 pivots for
/// zero-diagonal blocks. Throws DecompositionFailed on failure.
CMatrix symmetric_decompose(const CMatrix &B);

/// g = exp(A) for a seeded random complex antisymmetric A, |A_ij| < 1.
CMatrix random_orthogonal(int k, std::uint64_t seed);

/// max |(g^T g - I)_ij|.
double orthogonality_residual(const CMatrix &g);

/// (g h)(alpha) = sum_beta c_{alpha beta}(g) h(beta) where c_{alpha beta} is the
/// coefficient of x^beta in prod_j (sum_l g_{jl} x_l)^{alpha_j}; computed for
/// every |alpha| <= degree_bound (default value 0 beyond).
EdgeColoringModel apply_orthogonal(const CMatrix &g, const EdgeColoringModel &h,
                                   int degree_bound);
TensorAssignment apply_orthogonal(const CMatrix &g, const TensorAssignment &h);

/// Applies g to one tensor.
VertexTensor apply_orthogonal(const CMatrix &g, const VertexTensor &h);

}  // namespace holant
