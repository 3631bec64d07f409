#include "permutex/chaotic_keygen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "argsort.hpp"
#include "permutex/errors.hpp"

namespace permutex {

namespace {

void check_r(double r) {
    if (!(r > 0.0) || !(r <= 4.0)) {
        throw ParamError("control parameter r must lie in (0,4], got " + std::to_string(r));
    }
}

} // namespace

void ChaosParams::validate() const {
    check_r(r);
    if (!(x0 > 0.0) || !(x0 < 1.0)) {
        throw ParamError("initial state x0 must lie in (0,1), got " + std::to_string(x0));
    }
    if (scale < 1) {
        throw ParamError("scale must be a positive integer");
    }
    if (n < 1) {
        throw ParamError("key length n must be at least 1");
    }
}

double logistic_sine_step(double x, double r) {
    check_r(r);
    double v = r * x * (1.0 - x) + (4.0 - r) * std::sin(std::numbers::pi * x) / 4.0;
    v = std::fmod(v, 1.0);
    if (v < 0.0) {
        v += 1.0;
    }
    if (v >= 1.0) {
        v -= 1.0;
    }
    return v;
}

ChaoticSequence generate_sequence(const ChaosParams& p) {
    p.validate();
    ChaoticSequence seq;
    seq.values.reserve(p.n);
    double x = p.x0;
    const std::size_t total = 2 * static_cast<std::size_t>(p.n);
    for (std::size_t i = 0; i < total; ++i) {
        x = logistic_sine_step(x, p.r);
        if (i >= static_cast<std::size_t>(p.n)) {
            seq.values.push_back(x);
        }
    }
    return seq;
}

PermutationKey derive_permutation_key(const ChaoticSequence& s, std::uint32_t scale) {
    if (s.values.empty()) {
        throw ParamError("cannot derive a key from an empty sequence");
    }
    if (scale < 1) {
        throw ParamError("scale must be a positive integer");
    }
    std::vector<std::int64_t> quantized;
    quantized.reserve(s.values.size());
    for (double v : s.values) {
        quantized.push_back(std::llround(v * static_cast<double>(scale)));
    }
    const std::vector<std::uint32_t> sorted_positions = detail::stable_argsort(quantized);
    PermutationKey key;
    key.key = detail::stable_argsort(sorted_positions);
    return key;
}

std::size_t quantization_collisions(const ChaoticSequence& s, std::uint32_t scale) {
    if (scale < 1) {
        throw ParamError("scale must be a positive integer");
    }
    std::vector<std::int64_t> quantized;
    quantized.reserve(s.values.size());
    for (double v : s.values) {
        quantized.push_back(std::llround(v * static_cast<double>(scale)));
    }
    std::sort(quantized.begin(), quantized.end());
    const auto distinct = std::unique(quantized.begin(), quantized.end()) - quantized.begin();
    return quantized.size() - static_cast<std::size_t>(distinct);
}

} // namespace permutex
