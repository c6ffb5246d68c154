#include "holant/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holant/errors.hpp"

namespace holant {

ComplexPoly::ComplexPoly(std::vector<cplx> coefficients) : c_(std::move(coefficients))
{
    while (!c_.empty() && c_.back() == cplx(0.0)) {
        c_.pop_back();
    }
}

cplx ComplexPoly::operator[](int i) const
{
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : cplx(0.0);
}

cplx ComplexPoly::operator()(cplx z) const
{
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

ComplexPoly ComplexPoly::derivative() const
{
    std::vector<cplx> d;
    for (std::size_t i = 1; i < c_.size(); i++) {
        d.push_back(static_cast<double>(i) * c_[i]);
    }
    return ComplexPoly(d);
}

double ComplexPoly::max_abs_coefficient() const
{
    double m = 0.0;
    for (const cplx &c : c_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

namespace {

bool residual_ok(const ComplexPoly &p, cplx z, double cmax, int d)
{
    return std::abs(p(z)) <= 1e-9 * cmax * std::pow(std::max(1.0, std::abs(z)), d);
}

// Aberth-Ehrlich iteration on a polynomial with nonzero constant term.
std::vector<cplx> aberth(const ComplexPoly &p)
{
    const int d = p.degree();
    const ComplexPoly dp = p.derivative();
    const auto &c = p.coefficients();

    // Start on a circle whose radius is the geometric mean of the root moduli.
    const double radius = std::pow(std::abs(c[0] / c[d]), 1.0 / d);
    std::vector<cplx> z(d);
    for (int i = 0; i < d; i++) {
        z[i] = std::polar(radius, 2.0 * std::numbers::pi * i / d + 0.4);
    }

    const int cap = 1000;
    std::vector<bool> done(d, false);
    for (int iter = 0; iter < cap; iter++) {
        bool moved = false;
        for (int i = 0; i < d; i++) {
            if (done[i]) {
                continue;
            }
            const cplx pz = p(z[i]);
            if (pz == cplx(0.0)) {
                done[i] = true;
                continue;
            }
            const cplx ratio = pz / dp(z[i]);
            cplx repel = 0.0;
            for (int j = 0; j < d; j++) {
                if (j != i) {
                    repel += 1.0 / (z[i] - z[j]);
                }
            }
            cplx step = ratio / (1.0 - ratio * repel);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                step = ratio;
            }
            z[i] -= step;
            if (std::abs(step) <= 1e-15 * std::abs(z[i])) {
                done[i] = true;
            } else {
                moved = true;
            }
        }
        if (!moved) {
            break;
        }
    }
    return z;
}

}  // namespace

std::vector<cplx> poly_roots(const ComplexPoly &p)
{
    if (p.degree() < 1) {
        throw PreconditionError("poly_roots needs degree >= 1, got " + std::to_string(p.degree()));
    }
    const double cmax = p.max_abs_coefficient();
    const int d = p.degree();
    const auto &c = p.coefficients();
    std::size_t zeros = 0;
    while (c[zeros] == cplx(0.0)) {
        zeros++;
    }
    std::vector<cplx> roots(zeros, cplx(0.0));
    if (static_cast<int>(zeros) < d) {
        const ComplexPoly rest(std::vector<cplx>(c.begin() + zeros, c.end()));
        for (const cplx &r : aberth(rest)) {
            roots.push_back(r);
        }
    }
    for (const cplx &r : roots) {
        if (!residual_ok(p, r, cmax, d)) {
            throw RootFindingError("root finder did not converge", roots);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const cplx &a, const cplx &b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) {
            return ma < mb;
        }
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

}  // namespace holant
