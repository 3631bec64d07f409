#include "permutex/permutation.hpp"

#include <string>
#include <utility>

#include "permutex/errors.hpp"

namespace permutex {

PixelPermutation::PixelPermutation(std::vector<std::uint32_t> mapping, Provenance provenance)
    : mapping_(std::move(mapping)), provenance_(std::move(provenance)) {
    const std::size_t n = mapping_.size();
    std::vector<bool> seen(n, false);
    for (std::size_t z = 0; z < n; ++z) {
        const std::uint32_t m = mapping_[z];
        if (m >= n || seen[m]) {
            throw ValidationError("mapping is not a permutation: entry " + std::to_string(z) +
                                  " = " + std::to_string(m));
        }
        seen[m] = true;
    }
}

std::uint64_t ranking_hash(const ImportanceRanking& ranking) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (std::uint32_t v : ranking.order) {
        for (int shift = 0; shift < 32; shift += 8) {
            hash ^= (v >> shift) & 0xFFu;
            hash *= 1099511628211ULL;
        }
    }
    return hash;
}

PixelPermutation compose_permutation(const ImportanceRanking& ranking, const PermutationKey& key,
                                     Provenance provenance) {
    if (ranking.order.size() != key.key.size()) {
        throw ShapeError("ranking length " + std::to_string(ranking.order.size()) +
                         " does not match key length " + std::to_string(key.key.size()));
    }
    std::vector<std::uint32_t> mapping(key.key.size());
    for (std::size_t z = 0; z < key.key.size(); ++z) {
        mapping[z] = ranking.order[key.key[z]];
    }
    provenance.ranking_hash = ranking_hash(ranking);
    return PixelPermutation(std::move(mapping), std::move(provenance));
}

GrayImage apply_permutation(const GrayImage& img, const PixelPermutation& p) {
    if (p.size() != img.pixel_count()) {
        throw ShapeError("permutation length " + std::to_string(p.size()) +
                         " does not match pixel count " + std::to_string(img.pixel_count()));
    }
    std::vector<std::uint8_t> out(img.pixel_count());
    const std::vector<std::uint8_t>& in = img.pixels();
    const std::vector<std::uint32_t>& mapping = p.mapping();
    for (std::size_t z = 0; z < out.size(); ++z) {
        out[z] = in[mapping[z]];
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

PixelPermutation invert_permutation(const PixelPermutation& p) {
    std::vector<std::uint32_t> inverse(p.size());
    const std::vector<std::uint32_t>& mapping = p.mapping();
    for (std::size_t z = 0; z < mapping.size(); ++z) {
        inverse[mapping[z]] = static_cast<std::uint32_t>(z);
    }
    return PixelPermutation(std::move(inverse), p.provenance());
}

ScrambleResult permutex(const GrayImage& img, ChaosParams chaos, int window) {
    chaos.n = static_cast<std::uint32_t>(img.pixel_count());
    chaos.validate();

    const FeatureMap freq = magnitude_log_norm(fft_shift(dft2(img)));
    const FeatureMap contrast = local_contrast(img, window);
    const FeatureMap importance = importance_map(freq, contrast);
    const ImportanceRanking ranking = rank_pixels(importance);

    const ChaoticSequence seq = generate_sequence(chaos);
    const PermutationKey key = derive_permutation_key(seq, chaos.scale);

    Provenance prov;
    prov.scheme = "permutex";
    prov.r = chaos.r;
    prov.x0 = chaos.x0;
    prov.scale = chaos.scale;
    prov.window = window;

    PixelPermutation perm = compose_permutation(ranking, key, std::move(prov));
    GrayImage scrambled = apply_permutation(img, perm);
    return ScrambleResult{std::move(scrambled), std::move(perm)};
}

GrayImage unpermutex(const GrayImage& img, const PixelPermutation& p) {
    return apply_permutation(img, invert_permutation(p));
}

} // namespace permutex
