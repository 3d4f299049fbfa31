#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fequad/grid.hpp"
#include "fequad/stencils.hpp"

namespace fequad {

/// Two-point Hermite cardinal basis polynomial p_{m,r}^{[t1,t2]}: its j-th
/// derivative at t1 is delta_{jm} for j = 0..r and all derivatives through
/// order r vanish at t2.
inline double hermite_blend(int m, int r, double t1, double t2, double t) {
    if (m < 0 || r < 0 || m > r)
        throw std::domain_error("hermite_blend: requires 0 <= m <= r");
    if (t1 == t2) throw std::invalid_argument("hermite_blend: t1 and t2 must differ");

    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;

    const double u = (t - t1) / (t2 - t1);
    // sum_{j=0}^{r-m} C(r+j, r) u^j by Horner, binomials built multiplicatively
    std::vector<double> binom(r - m + 1);
    binom[0] = 1.0;
    for (int j = 1; j <= r - m; ++j) binom[j] = binom[j - 1] * (r + j) / j;
    double s = 0.0;
    for (int j = r - m; j >= 0; --j) s = s * u + binom[j];

    const double ratio = (t - t2) / (t1 - t2);
    double ratio_pow = 1.0;
    for (int i = 0; i <= r; ++i) ratio_pow *= ratio;

    return std::pow(t - t1, m) / mfact * ratio_pow * s;
}

namespace detail {

/// Blending polynomial on (b, 2b-a) built from endpoint derivative data:
/// derivatives of f at b enter through the [b, 2b-a] basis, derivatives at a
/// through the reversed [2b-a, b] basis.
inline cplx blend_polynomial(const Interval& iv, const std::vector<cplx>& left_derivs,
                             const std::vector<cplx>& right_derivs, int r, double x) {
    const double b = iv.b;
    const double mirror = 2.0 * iv.b - iv.a;
    cplx acc = 0.0;
    for (int m = 0; m <= r; ++m) {
        acc += right_derivs[m] * hermite_blend(m, r, b, mirror, x);
        acc += left_derivs[m] * hermite_blend(m, r, mirror, b, x);
    }
    return acc;
}

}  // namespace detail

/// Periodic extension from analytically supplied endpoint derivatives
/// left_derivs[m] = f^{(m)}(a), right_derivs[m] = f^{(m)}(b), m = 0..r.
inline ExtendedGrid extend_exact(const GridFunction& grid,
                                 const std::vector<cplx>& left_derivs,
                                 const std::vector<cplx>& right_derivs, int r) {
    if (r < 0) throw std::invalid_argument("extend_exact: r must be >= 0");
    if (static_cast<int>(left_derivs.size()) != r + 1 ||
        static_cast<int>(right_derivs.size()) != r + 1)
        throw std::invalid_argument("extend_exact: derivative arrays must have r+1 entries");

    const int n = grid.n;
    std::vector<cplx> vals(2 * n);
    for (int j = 0; j <= n; ++j) vals[j] = grid.values[j];
    for (int j = n + 1; j < 2 * n; ++j)
        vals[j] = detail::blend_polynomial(grid.interval, left_derivs, right_derivs, r,
                                           grid.node(j));
    return ExtendedGrid(grid.interval, n, std::move(vals));
}

/// Periodic extension with endpoint derivatives approximated by one-sided
/// finite-difference stencils of order q.
inline ExtendedGrid extend_grid(const GridFunction& grid, const ExtensionParams& params) {
    const int r = params.r;
    const int q = params.q;
    if (r >= 1 && grid.n < r + q - 1)
        throw std::invalid_argument("extend_grid: n too small for the stencil width");

    std::vector<cplx> left(r + 1), right(r + 1);
    left[0] = grid.values.front();
    right[0] = grid.values.back();
    for (int m = 1; m <= r; ++m) {
        left[m] = endpoint_derivative(grid, m, q, Side::left);
        right[m] = endpoint_derivative(grid, m, q, Side::right);
    }
    return extend_exact(grid, left, right, r);
}

}  // namespace fequad
