#pragma once

#include <cstdint>
#include <string>

#include "permutex/chaotic_keygen.hpp"
#include "permutex/image.hpp"
#include "permutex/permutation.hpp"

namespace permutex {

enum class Scheme {
    RandomRc,
    ChaoticRc,
    KeyOnly,
    Permutex,
};

const char* to_string(Scheme scheme);

/// Accepts the exact names "random_rc", "chaotic_rc", "key_only",
/// "permutex"; anything else throws ParamError.
Scheme parse_scheme(const std::string& name);

/// Seeded uniform row permutation followed by a column permutation.
/// Pixel (x,y) moves as a whole row/column pair, never independently.
ScrambleResult random_row_column_shuffle(const GrayImage& img, std::uint64_t seed);

/// Row/column permutations from one chaotic trajectory of H+W values:
/// rows from the argsort of the first H, columns from the last W.
ScrambleResult chaotic_row_column_shuffle(const GrayImage& img, const ChaosParams& chaos);

/// The chaotic key applied directly as the full-frame permutation, with no
/// feature-based ranking in front of it.
ScrambleResult key_only_permutation(const GrayImage& img, ChaosParams chaos);

/// Dispatch helper for the comparison workflow. RandomRc consumes only the
/// seed; the chaotic schemes consume chaos; Permutex also consumes window.
ScrambleResult run_scheme(Scheme scheme, const GrayImage& img, const ChaosParams& chaos,
                          int window, std::uint64_t seed);

} // namespace permutex
