#include "holant/multiset.hpp"

#include <cmath>

#include "holant/errors.hpp"

namespace holant {

int total(const Alpha &alpha)
{
    int s = 0;
    for (int a : alpha) {
        s += a;
    }
    return s;
}

namespace {

void fill_multisets(int k, int pos, int remaining, Alpha &cur, std::vector<Alpha> &out)
{
    if (pos == k - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= remaining; a++) {
        cur[pos] = a;
        fill_multisets(k, pos + 1, remaining - a, cur, out);
    }
}

}  // namespace

std::vector<Alpha> multisets_of_total(int k, int d)
{
    if (k < 1 || d < 0) {
        throw PreconditionError("multisets_of_total: need k >= 1 and d >= 0");
    }
    std::vector<Alpha> out;
    Alpha cur(k, 0);
    fill_multisets(k, 0, d, cur, out);
    return out;
}

std::vector<Alpha> multisets_up_to(int k, int d)
{
    std::vector<Alpha> out;
    for (int t = 0; t <= d; t++) {
        auto part = multisets_of_total(k, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t count_multisets(int k, int d)
{
    // C(d + k - 1, k - 1)
    std::uint64_t r = 1;
    for (int i = 1; i < k; i++) {
        r = r * static_cast<std::uint64_t>(d + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

double factorial(int n)
{
    return std::tgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int r)
{
    if (r < 0 || r > n) {
        return 0.0;
    }
    double out = 1.0;
    for (int i = 1; i <= r; i++) {
        out = out * (n - r + i) / i;
    }
    return std::round(out);
}

double multinomial(const Alpha &alpha)
{
    double out = 1.0;
    int running = 0;
    for (int a : alpha) {
        running += a;
        out *= binomial(running, a);
    }
    return out;
}

cplx ipow(cplx z, int e)
{
    cplx result = 1.0;
    cplx base = z;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

MultisetIndexer::MultisetIndexer(int k, int d) : k_(k), d_(d)
{
    if (k < 1 || d < 0) {
        throw PreconditionError("MultisetIndexer: need k >= 1 and d >= 0");
    }
    strides_.assign(k, 0);
    std::size_t s = 1;
    for (int j = 0; j + 1 < k; j++) {
        strides_[j] = s;
        if (s > (std::size_t{1} << 40) / static_cast<std::size_t>(d + 1)) {
            throw BudgetExceeded("tensor of degree " + std::to_string(d) + " with " +
                                 std::to_string(k) + " colors is too large to store densely");
        }
        s *= static_cast<std::size_t>(d + 1);
    }
    size_ = s;
}

std::size_t MultisetIndexer::index(const Alpha &alpha) const
{
    std::size_t idx = 0;
    for (int j = 0; j + 1 < k_; j++) {
        idx += strides_[j] * static_cast<std::size_t>(alpha[j]);
    }
    return idx;
}

}  // namespace holant
