#pragma once

#include <vector>

#include "holant/multiset.hpp"

namespace holant {

/// Polynomial with complex coefficients c_0..c_d. Exact-zero leading
/// coefficients are dropped on construction, so c_d != 0 unless the
/// polynomial is zero (which has no coefficients and degree -1).
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> coefficients);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<cplx> &coefficients() const { return c_; }

    /// c_i, zero beyond the degree.
    cplx operator[](int i) const;
    cplx operator()(cplx z) const;

    ComplexPoly derivative() const;

    /// max |c_i|.
    double max_abs_coefficient() const;

private:
    std::vector<cplx> c_;
};

/// Roots with multiplicity, sorted by modulus and then by argument. Exact
/// zero roots are split off first; the rest come from Aberth iteration.
/// Throws PreconditionError when degree < 1 and RootFindingError when the
/// residual test |p(z)| <= 1e-9 max|c_i| max(1,|z|)^d fails at the cap.
std::vector<cplx> poly_roots(const ComplexPoly &p);

}  // namespace holant
