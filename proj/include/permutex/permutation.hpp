#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permutex/chaotic_keygen.hpp"
#include "permutex/feature_extraction.hpp"
#include "permutex/image.hpp"

namespace permutex {

/// How a permutation was produced: scheme name plus whichever parameters
/// that scheme consumed. Carried through serialization so a run can be
/// replayed from its outputs alone.
struct Provenance {
    std::string scheme;
    std::optional<double> r;
    std::optional<double> x0;
    std::optional<std::uint32_t> scale;
    std::optional<int> window;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> ranking_hash;

    bool operator==(const Provenance&) const = default;
};

/// Bijective pixel rearrangement with gather semantics: destination slot z
/// receives the pixel at source flat index mapping()[z].
class PixelPermutation {
public:
    PixelPermutation() = default;

    /// Throws ValidationError unless mapping is a permutation of 0..N-1.
    explicit PixelPermutation(std::vector<std::uint32_t> mapping, Provenance provenance = {});

    std::size_t size() const noexcept { return mapping_.size(); }
    const std::vector<std::uint32_t>& mapping() const noexcept { return mapping_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    bool operator==(const PixelPermutation&) const = default;

private:
    std::vector<std::uint32_t> mapping_;
    Provenance provenance_;
};

/// FNV-1a over the ranking's little-endian index bytes; recorded in
/// provenance so a stored permutation can be tied to the ranking run.
std::uint64_t ranking_hash(const ImportanceRanking& ranking);

/// mapping[z] = ranking.order[key.key[z]]. The provenance's ranking_hash
/// field is filled in here. Throws ShapeError on length mismatch.
PixelPermutation compose_permutation(const ImportanceRanking& ranking, const PermutationKey& key,
                                     Provenance provenance = {});

/// flat_out[z] = flat_in[mapping[z]]. Throws ShapeError when the
/// permutation length differs from the pixel count.
GrayImage apply_permutation(const GrayImage& img, const PixelPermutation& p);

PixelPermutation invert_permutation(const PixelPermutation& p);

struct ScrambleResult {
    GrayImage image;
    PixelPermutation permutation;
};

/// The full pipeline: spectrum + contrast features, importance ranking,
/// chaotic key, composition, application. chaos.n is set to the pixel
/// count internally.
ScrambleResult permutex(const GrayImage& img, ChaosParams chaos, int window = 3);

/// Exact inverse of the scramble: applies the inverted permutation.
GrayImage unpermutex(const GrayImage& img, const PixelPermutation& p);

} // namespace permutex
