#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace holant {

using cplx = std::complex<double>;

/// A color multiset as its incidence vector in N^k.
using Alpha = std::vector<int>;

/// |alpha| = sum of entries.
int total(const Alpha &alpha);

/// All alpha in N^k with |alpha| = d, in lexicographic order.
std::vector<Alpha> multisets_of_total(int k, int d);

/// All alpha in N^k with |alpha| <= d, grouped by total then lexicographic.
std::vector<Alpha> multisets_up_to(int k, int d);

/// Number of alpha in N^k with |alpha| = d.
std::uint64_t count_multisets(int k, int d);

/// d! / prod(alpha_j!) for |alpha| = d: the number of colorings of d labelled
/// edges that produce the multiset alpha.
double multinomial(const Alpha &alpha);

double binomial(int n, int r);
double factorial(int n);

/// z^e for integer e >= 0 with 0^0 = 1.
cplx ipow(cplx z, int e);

/// Dense layout for functions on N^k_d: index(alpha) = sum_{j<k-1} alpha_j
/// (d+1)^j; the last coordinate is implied by |alpha| = d.
class MultisetIndexer {
public:
    MultisetIndexer() = default;
    MultisetIndexer(int k, int d);

    int colors() const { return k_; }
    int degree() const { return d_; }
    std::size_t size() const { return size_; }

    /// Offset contributed by one incidence of color c.
    std::size_t stride(int c) const { return c + 1 < k_ ? strides_[c] : 0; }
    std::size_t index(const Alpha &alpha) const;

private:
    int k_ = 1;
    int d_ = 0;
    std::size_t size_ = 1;
    std::vector<std::size_t> strides_;
};

}  // namespace holant
