#include "permutex/baselines.hpp"

#include <random>
#include <utility>

#include "argsort.hpp"
#include "permutex/errors.hpp"
#include "rng_util.hpp"

namespace permutex {

namespace {

/// Builds the flat gather mapping of "output row y takes source row
/// rows[y], output column x takes source column cols[x]".
ScrambleResult apply_row_column(const GrayImage& img, const std::vector<std::uint32_t>& rows,
                                const std::vector<std::uint32_t>& cols, Provenance provenance) {
    const int w = img.width();
    const int h = img.height();
    std::vector<std::uint32_t> mapping(img.pixel_count());
    for (int y = 0; y < h; ++y) {
        const std::uint32_t src_row_base = rows[static_cast<std::size_t>(y)] *
                                           static_cast<std::uint32_t>(w);
        for (int x = 0; x < w; ++x) {
            mapping[img.flat_index(x, y)] = src_row_base + cols[static_cast<std::size_t>(x)];
        }
    }
    PixelPermutation perm(std::move(mapping), std::move(provenance));
    GrayImage scrambled = apply_permutation(img, perm);
    return ScrambleResult{std::move(scrambled), std::move(perm)};
}

} // namespace

const char* to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::RandomRc: return "random_rc";
    case Scheme::ChaoticRc: return "chaotic_rc";
    case Scheme::KeyOnly: return "key_only";
    case Scheme::Permutex: return "permutex";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string& name) {
    if (name == "random_rc") return Scheme::RandomRc;
    if (name == "chaotic_rc") return Scheme::ChaoticRc;
    if (name == "key_only") return Scheme::KeyOnly;
    if (name == "permutex") return Scheme::Permutex;
    throw ParamError("unknown scheme \"" + name +
                     "\" (expected random_rc, chaotic_rc, key_only, or permutex)");
}

ScrambleResult random_row_column_shuffle(const GrayImage& img, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const std::vector<std::uint32_t> rows =
        detail::random_permutation(static_cast<std::size_t>(img.height()), gen);
    const std::vector<std::uint32_t> cols =
        detail::random_permutation(static_cast<std::size_t>(img.width()), gen);

    Provenance prov;
    prov.scheme = "random_rc";
    prov.seed = seed;
    return apply_row_column(img, rows, cols, std::move(prov));
}

ScrambleResult chaotic_row_column_shuffle(const GrayImage& img, const ChaosParams& chaos) {
    ChaosParams p = chaos;
    p.n = static_cast<std::uint32_t>(img.height()) + static_cast<std::uint32_t>(img.width());
    p.validate();
    const ChaoticSequence seq = generate_sequence(p);

    const std::vector<double> row_values(seq.values.begin(),
                                         seq.values.begin() + img.height());
    const std::vector<double> col_values(seq.values.begin() + img.height(), seq.values.end());
    const std::vector<std::uint32_t> rows = detail::stable_argsort(row_values);
    const std::vector<std::uint32_t> cols = detail::stable_argsort(col_values);

    Provenance prov;
    prov.scheme = "chaotic_rc";
    prov.r = chaos.r;
    prov.x0 = chaos.x0;
    prov.scale = chaos.scale;
    return apply_row_column(img, rows, cols, std::move(prov));
}

ScrambleResult key_only_permutation(const GrayImage& img, ChaosParams chaos) {
    chaos.n = static_cast<std::uint32_t>(img.pixel_count());
    chaos.validate();
    const ChaoticSequence seq = generate_sequence(chaos);
    PermutationKey key = derive_permutation_key(seq, chaos.scale);

    Provenance prov;
    prov.scheme = "key_only";
    prov.r = chaos.r;
    prov.x0 = chaos.x0;
    prov.scale = chaos.scale;

    PixelPermutation perm(std::move(key.key), std::move(prov));
    GrayImage scrambled = apply_permutation(img, perm);
    return ScrambleResult{std::move(scrambled), std::move(perm)};
}

ScrambleResult run_scheme(Scheme scheme, const GrayImage& img, const ChaosParams& chaos,
                          int window, std::uint64_t seed) {
    switch (scheme) {
    case Scheme::RandomRc: return random_row_column_shuffle(img, seed);
    case Scheme::ChaoticRc: return chaotic_row_column_shuffle(img, chaos);
    case Scheme::KeyOnly: return key_only_permutation(img, chaos);
    case Scheme::Permutex: return permutex(img, chaos, window);
    }
    throw ParamError("unknown scheme");
}

} // namespace permutex
