#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fequad/grid.hpp"

namespace fequad {

enum class StencilDirection { forward, backward };
enum class Side { left, right };

/// One-sided finite-difference stencil for the m-th derivative with accuracy
/// order q.  Coefficients are unscaled: the user applies the h^{-m} factor
/// (and the (-1)^m sign for the backward direction).
struct Stencil {
    int m;
    int q;
    StencilDirection direction;
    std::vector<double> coefficients;  // length m + q

    int width() const { return m + q; }
};

namespace detail {

using bigint = boost::multiprecision::cpp_int;

struct Rational {
    bigint num;
    bigint den;  // > 0

    Rational() : num(0), den(1) {}
    Rational(bigint n) : num(std::move(n)), den(1) {}
    Rational(bigint n, bigint d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) { den = 1; return; }
        bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }

    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }

    double to_double() const {
        return num.convert_to<double>() / den.convert_to<double>();
    }
};

/// Solves the (m+q) x (m+q) monomial-exactness system
///   sum_l c_l l^j = m! delta_{j,m},  j = 0..m+q-1
/// by exact fraction-free-ish Gaussian elimination.
inline std::vector<double> solve_taylor_system(int m, int q) {
    const int w = m + q;
    std::vector<std::vector<Rational>> aug(w, std::vector<Rational>(w + 1));
    for (int j = 0; j < w; ++j) {
        for (int l = 0; l < w; ++l) {
            bigint p = 1;
            for (int e = 0; e < j; ++e) p *= l;
            aug[j][l] = Rational(p);
        }
        aug[j][w] = Rational(0);
    }
    bigint mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    aug[m][w] = Rational(mfact);

    for (int col = 0; col < w; ++col) {
        int piv = -1;
        for (int row = col; row < w; ++row)
            if (!aug[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw std::logic_error("stencils: singular Taylor system");
        std::swap(aug[col], aug[piv]);
        for (int row = 0; row < w; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            Rational factor = aug[row][col] / aug[col][col];
            for (int k = col; k <= w; ++k)
                aug[row][k] = aug[row][k] - factor * aug[col][k];
        }
    }

    std::vector<double> c(w);
    for (int i = 0; i < w; ++i) c[i] = (aug[i][w] / aug[i][i]).to_double();
    return c;
}

}  // namespace detail

/// Minimal-width one-sided stencil of accuracy order q for the m-th
/// derivative on nodes {0, 1, ..., m+q-1} (forward) or {0, -1, ...}
/// (backward; same coefficient table, sign absorbed at use site).
inline Stencil fd_coefficients(int m, int q, StencilDirection direction) {
    if (m < 1) throw std::invalid_argument("fd_coefficients: m must be >= 1");
    if (q < 1) throw std::invalid_argument("fd_coefficients: q must be >= 1");
    if (m + q > 16)
        throw std::invalid_argument(
            "fd_coefficients: m+q > 16 rejected (stencil conditioning)");
    return Stencil{m, q, direction, detail::solve_taylor_system(m, q)};
}

/// Order-q approximation of f^{(m)} at the interval endpoint from the grid
/// samples.  side = left uses the forward stencil at x = a, side = right the
/// backward stencil at x = b; m = 0 returns the endpoint sample.
inline cplx endpoint_derivative(const GridFunction& grid, int m, int q, Side side) {
    if (m < 0) throw std::invalid_argument("endpoint_derivative: m must be >= 0");
    if (m == 0) return side == Side::left ? grid.values.front() : grid.values.back();

    const int width = m + q;
    if (grid.n < width - 1) {
        std::ostringstream msg;
        msg << "endpoint_derivative: grid needs n >= " << (width - 1)
            << " points for m=" << m << ", q=" << q << " (got n=" << grid.n << ")";
        throw std::invalid_argument(msg.str());
    }

    const Stencil st = fd_coefficients(
        m, q, side == Side::left ? StencilDirection::forward : StencilDirection::backward);
    const double h = grid.interval.length() / grid.n;

    cplx acc = 0.0;
    if (side == Side::left) {
        for (int l = 0; l < width; ++l) acc += st.coefficients[l] * grid.values[l];
    } else {
        for (int l = 0; l < width; ++l) acc += st.coefficients[l] * grid.values[grid.n - l];
        if (m % 2 != 0) acc = -acc;
    }
    return acc * std::pow(h, -m);
}

}  // namespace fequad
