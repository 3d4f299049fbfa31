#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fequad {

using cplx = std::complex<double>;

/// Closed interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval: requires finite a < b");
    }

    double length() const { return b - a; }
};

/// Smoothness order r of the periodic extension and accuracy order q of the
/// endpoint-derivative stencils.  The one-argument form applies the default
/// q = r (q = 1 when r = 0).
struct ExtensionParams {
    int r;
    int q;

    explicit ExtensionParams(int r_) : ExtensionParams(r_, r_ >= 1 ? r_ : 1) {}

    ExtensionParams(int r_, int q_) : r(r_), q(q_) {
        if (r < 0) throw std::invalid_argument("ExtensionParams: r must be >= 0");
        if (q < 1) throw std::invalid_argument("ExtensionParams: q must be >= 1");
    }
};

/// Equispaced samples values[j] = f(a + (b-a) j / n), j = 0..n.
struct GridFunction {
    Interval interval;
    int n;
    std::vector<cplx> values;

    GridFunction(Interval iv, int n_, std::vector<cplx> vals)
        : interval(iv), n(n_), values(std::move(vals)) {
        if (n < 2) throw std::invalid_argument("GridFunction: n must be >= 2");
        if (static_cast<int>(values.size()) != n + 1)
            throw std::invalid_argument("GridFunction: expected n+1 values");
    }

    double node(int j) const { return interval.a + interval.length() * j / n; }

    static GridFunction sample(Interval iv, int n,
                               const std::function<cplx(double)>& f) {
        if (n < 2) throw std::invalid_argument("GridFunction: n must be >= 2");
        std::vector<cplx> vals(n + 1);
        for (int j = 0; j <= n; ++j) {
            const double x = iv.a + iv.length() * j / n;
            vals[j] = f(x);
            if (!std::isfinite(vals[j].real()) || !std::isfinite(vals[j].imag())) {
                std::ostringstream msg;
                msg << "GridFunction: envelope sample is not finite at node j=" << j
                    << " (x=" << x << ")";
                throw std::invalid_argument(msg.str());
            }
        }
        return GridFunction(iv, n, std::move(vals));
    }
};

/// One period of the 2(b-a)-periodic extension on the doubled grid:
/// values[j] = f^e(a + (b-a) j / n) for j = 0..2n-1.  Entries 0..n are the
/// source samples, entries n+1..2n-1 the blending polynomial.
struct ExtendedGrid {
    Interval interval;
    int n;
    std::vector<cplx> values;

    ExtendedGrid(Interval iv, int n_, std::vector<cplx> vals)
        : interval(iv), n(n_), values(std::move(vals)) {
        if (static_cast<int>(values.size()) != 2 * n)
            throw std::invalid_argument("ExtendedGrid: expected 2n values");
    }

    double period() const { return 2.0 * interval.length(); }
    double node(int j) const { return interval.a + interval.length() * j / n; }
};

}  // namespace fequad
