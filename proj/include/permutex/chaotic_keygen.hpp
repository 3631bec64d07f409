#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace permutex {

/// Parameters of the hybrid logistic-sine map and key quantization.
/// Defaults are pinned so runs are reproducible; every report echoes them.
struct ChaosParams {
    double r = 3.99;
    double x0 = 0.41;
    std::uint32_t scale = 1000;
    std::uint32_t n = 1;

    /// Throws ParamError unless r in (0,4], x0 in (0,1), scale >= 1, n >= 1.
    void validate() const;
};

/// n chaotic states in [0,1), the latter half of a 2n-step trajectory.
struct ChaoticSequence {
    std::vector<double> values;
};

/// Bijective index sequence over 0..n-1 derived from a chaotic sequence.
struct PermutationKey {
    std::vector<std::uint32_t> key;
};

/// One step of the hybrid map:
/// ( r*x*(1-x) + (4-r)*sin(pi*x)/4 ) mod 1.
/// r=4 degenerates to the pure logistic map exactly. Throws ParamError when
/// r is outside (0,4].
double logistic_sine_step(double x, double r);

/// Iterates the map 2n times from x0 and keeps the last n states.
ChaoticSequence generate_sequence(const ChaosParams& p);

/// Quantizes with D = round(s*scale) (half away from zero), then double
/// stable argsort: K = argsort(argsort(D)). Duplicate D entries are broken
/// by trajectory order, so K is always a valid permutation.
PermutationKey derive_permutation_key(const ChaoticSequence& s, std::uint32_t scale);

/// Number of sequence entries lost to quantization ties:
/// length minus the count of distinct D values.
std::size_t quantization_collisions(const ChaoticSequence& s, std::uint32_t scale);

} // namespace permutex
