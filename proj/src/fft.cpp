#include "fft.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>

namespace permutex::detail {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

/// Iterative radix-2 Cooley-Tukey. n must be a power of two.
void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) {
        return;
    }

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const cd wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cd u = a[i + j];
                const cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (cd& x : a) {
            x *= scale;
        }
    }
}

/// Bluestein's algorithm for arbitrary n. The chirp angles use k^2 reduced
/// mod 2n before the float conversion so they stay exact for large k.
void fft_bluestein(std::vector<cd>& a) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) {
        m <<= 1;
    }

    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    std::vector<cd> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t kk = static_cast<std::uint64_t>(k) * k % two_n;
        const double ang = -std::numbers::pi * static_cast<double>(kk) / static_cast<double>(n);
        chirp[k] = std::polar(1.0, ang);
    }

    std::vector<cd> fa(m, cd(0.0, 0.0));
    std::vector<cd> fb(m, cd(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        fa[k] = a[k] * chirp[k];
        fb[k] = std::conj(chirp[k]);
    }
    for (std::size_t k = 1; k < n; ++k) {
        fb[m - k] = fb[k];
    }

    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < m; ++i) {
        fa[i] *= fb[i];
    }
    fft_pow2(fa, true);

    for (std::size_t k = 0; k < n; ++k) {
        a[k] = fa[k] * chirp[k];
    }
}

} // namespace

void fft_forward(std::vector<cd>& data) {
    if (data.size() < 2) {
        return;
    }
    if (is_pow2(data.size())) {
        fft_pow2(data, false);
    } else {
        fft_bluestein(data);
    }
}

} // namespace permutex::detail
