#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace permutex::detail {

/// Uniform draw from [0, bound) by rejection. mt19937_64's output sequence
/// is fixed by the standard and this reduction adds no modulo bias, so the
/// results are reproducible on any platform. std::uniform_int_distribution
/// is deliberately avoided; its algorithm is implementation-defined.
inline std::uint64_t bounded_uniform(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound < 2) {
        return 0;
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

/// Fisher-Yates shuffle of 0..n-1 with a pinned draw order.
inline std::vector<std::uint32_t> random_permutation(std::size_t n, std::mt19937_64& gen) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
        const std::uint64_t j = bounded_uniform(gen, i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

} // namespace permutex::detail
