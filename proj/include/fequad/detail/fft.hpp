#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace fequad::detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place forward DFT, X_k = sum_j x_j e^{-2 pi i j k / N}, N a power of two.
inline void fft_radix2(std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t m = 0; m < len / 2; ++m) {
                const std::complex<double> w{std::cos(ang * static_cast<double>(m)),
                                             std::sin(ang * static_cast<double>(m))};
                const std::complex<double> u = x[i + m];
                const std::complex<double> v = x[i + m + len / 2] * w;
                x[i + m] = u + v;
                x[i + m + len / 2] = u - v;
            }
        }
    }
}

/// Forward DFT of arbitrary length via Bluestein's chirp transform.
/// Chirp exponents are reduced mod 2N before the trig evaluation so large
/// indices do not lose precision.
inline void fft_bluestein(std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    const long long two_n = 2 * static_cast<long long>(n);
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long long jj = (static_cast<long long>(j) * static_cast<long long>(j)) % two_n;
        const double ang = -std::numbers::pi * static_cast<double>(jj) / static_cast<double>(n);
        chirp[j] = {std::cos(ang), std::sin(ang)};
    }

    std::vector<std::complex<double>> a(m, 0.0), b(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

    fft_radix2(a);
    fft_radix2(b);
    for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
    // inverse of length m via conjugation
    for (auto& v : a) v = std::conj(v);
    fft_radix2(a);
    for (auto& v : a) v = std::conj(v) / static_cast<double>(m);

    for (std::size_t j = 0; j < n; ++j) x[j] = a[j] * chirp[j];
}

/// Forward DFT, any length.
inline void fft(std::vector<std::complex<double>>& x) {
    if (x.size() <= 1) return;
    if (is_power_of_two(x.size()))
        fft_radix2(x);
    else
        fft_bluestein(x);
}

}  // namespace fequad::detail
