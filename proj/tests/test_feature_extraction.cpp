#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "permutex/errors.hpp"
#include "permutex/feature_extraction.hpp"

using permutex::ComplexSpectrum;
using permutex::FeatureKind;
using permutex::FeatureMap;
using permutex::GrayImage;
using permutex::ImportanceRanking;

namespace {

double max_abs_diff(const ComplexSpectrum& spec, const std::vector<std::complex<double>>& ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(spec.entries()[i] - ref[i]));
    }
    return worst;
}

FeatureMap make_map(FeatureKind kind, int w, int h, std::vector<double> values) {
    FeatureMap map;
    map.kind = kind;
    map.width = w;
    map.height = h;
    map.values = std::move(values);
    return map;
}

} // namespace

TEST_CASE("dft2 of a constant image is a single DC spike") {
    const GrayImage img(4, 3, std::vector<std::uint8_t>(12, 9));
    const ComplexSpectrum spec = permutex::dft2(img);
    CHECK(std::abs(spec.entry(0, 0) - std::complex<double>(12.0 * 9.0, 0.0)) < 1e-9);
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 4; ++v) {
            if (u == 0 && v == 0) continue;
            CHECK(std::abs(spec.entry(u, v)) < 1e-9);
        }
    }
}

TEST_CASE("dft2 of a 2-pixel row is [a+b, a-b]") {
    const GrayImage img(2, 1, {200, 30});
    const ComplexSpectrum spec = permutex::dft2(img);
    CHECK(std::abs(spec.entry(0, 0) - std::complex<double>(230.0, 0.0)) < 1e-9);
    CHECK(std::abs(spec.entry(0, 1) - std::complex<double>(170.0, 0.0)) < 1e-9);
}

TEST_CASE("dft2 matches the direct double-sum oracle") {
    std::mt19937_64 gen(21);
    const int shapes[][2] = {{8, 8}, {4, 4}, {3, 5}, {7, 6}, {5, 1}, {1, 8}, {6, 6}};
    for (const auto& shape : shapes) {
        const GrayImage img = oracles::random_image(gen, shape[0], shape[1]);
        const ComplexSpectrum spec = permutex::dft2(img);
        CHECK(max_abs_diff(spec, oracles::dft2_direct(img)) < 1e-9);
    }
}

TEST_CASE("dft2 of real input has conjugate symmetry") {
    std::mt19937_64 gen(22);
    const GrayImage img = oracles::random_image(gen, 6, 5);
    const ComplexSpectrum spec = permutex::dft2(img);
    for (int u = 0; u < img.height(); ++u) {
        for (int v = 0; v < img.width(); ++v) {
            const std::complex<double> mirrored =
                spec.entry((img.height() - u) % img.height(), (img.width() - v) % img.width());
            CHECK(std::abs(spec.entry(u, v) - std::conj(mirrored)) < 1e-9);
        }
    }
}

TEST_CASE("dft2 satisfies Parseval's identity") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 5; ++trial) {
        const int w = 1 + static_cast<int>(gen() % 12);
        const int h = 1 + static_cast<int>(gen() % 12);
        const GrayImage img = oracles::random_image(gen, w, h);
        double spatial = 0.0;
        for (std::uint8_t p : img.pixels()) {
            spatial += static_cast<double>(p) * static_cast<double>(p);
        }
        const ComplexSpectrum spec = permutex::dft2(img);
        double spectral = 0.0;
        for (const std::complex<double>& e : spec.entries()) {
            spectral += std::norm(e);
        }
        const double expected = spatial * w * h;
        CHECK(std::abs(spectral - expected) <= 1e-6 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("fft_shift swaps the quadrants of a 2x2 spectrum") {
    ComplexSpectrum spec(2, 2);
    spec.entry(0, 0) = {1, 0};
    spec.entry(0, 1) = {2, 0};
    spec.entry(1, 0) = {3, 0};
    spec.entry(1, 1) = {4, 0};
    const ComplexSpectrum shifted = permutex::fft_shift(spec);
    CHECK(shifted.entry(0, 0) == std::complex<double>(4, 0));
    CHECK(shifted.entry(0, 1) == std::complex<double>(3, 0));
    CHECK(shifted.entry(1, 0) == std::complex<double>(2, 0));
    CHECK(shifted.entry(1, 1) == std::complex<double>(1, 0));
}

TEST_CASE("fft_shift centers the DC entry") {
    const GrayImage img(5, 4, std::vector<std::uint8_t>(20, 50));
    const ComplexSpectrum shifted = permutex::fft_shift(permutex::dft2(img));
    CHECK(std::abs(shifted.entry(2, 2) - std::complex<double>(20.0 * 50.0, 0.0)) < 1e-9);
}

TEST_CASE("fft_shift twice is the identity on even shapes") {
    std::mt19937_64 gen(24);
    const GrayImage img = oracles::random_image(gen, 6, 4);
    const ComplexSpectrum once = permutex::dft2(img);
    const ComplexSpectrum twice = permutex::fft_shift(permutex::fft_shift(once));
    for (std::size_t i = 0; i < once.entries().size(); ++i) {
        CHECK(once.entries()[i] == twice.entries()[i]);
    }
}

TEST_CASE("magnitude_log_norm applies ln(mag+1) before normalizing") {
    ComplexSpectrum spec(3, 1);
    spec.entry(0, 0) = {0, 0};
    spec.entry(0, 1) = {3, 4};
    spec.entry(0, 2) = {std::exp(2.0) - 1.0, 0};
    const FeatureMap map = permutex::magnitude_log_norm(spec);
    CHECK(map.kind == FeatureKind::FrequencyNorm);
    CHECK(map.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(map.values[1] == doctest::Approx(std::log(6.0) / 2.0).epsilon(1e-12));
    CHECK(map.values[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("constant-magnitude spectrum normalizes to all zeros") {
    ComplexSpectrum spec(2, 2);
    spec.entry(0, 0) = {0, 5};
    spec.entry(0, 1) = {5, 0};
    spec.entry(1, 0) = {-5, 0};
    spec.entry(1, 1) = {3, 4};
    const FeatureMap map = permutex::magnitude_log_norm(spec);
    for (double v : map.values) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("magnitude_log_norm attains both endpoints") {
    std::mt19937_64 gen(25);
    const GrayImage img = oracles::random_image(gen, 8, 8);
    const FeatureMap map = permutex::magnitude_log_norm(permutex::fft_shift(permutex::dft2(img)));
    double lo = 2.0, hi = -1.0;
    for (double v : map.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
}

TEST_CASE("local contrast of a constant image is zero") {
    const GrayImage img(5, 5, std::vector<std::uint8_t>(25, 123));
    const FeatureMap map = permutex::local_contrast(img, 3);
    CHECK(map.kind == FeatureKind::ContrastRaw);
    for (double v : map.values) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("local contrast at an isolated spike matches the closed form") {
    std::vector<std::uint8_t> pixels(9, 0);
    pixels[4] = 255;
    const GrayImage img(3, 3, pixels);
    const FeatureMap map = permutex::local_contrast(img, 3);
    CHECK(map.values[4] == doctest::Approx(255.0 * std::sqrt(8.0) / 9.0).epsilon(1e-12));
}

TEST_CASE("local contrast matches the brute-force oracle, borders included") {
    std::mt19937_64 gen(26);
    for (int trial = 0; trial < 5; ++trial) {
        const GrayImage img = oracles::random_image(gen, 6, 6);
        for (const int window : {1, 3, 5}) {
            const FeatureMap map = permutex::local_contrast(img, window);
            for (int y = 0; y < 6; ++y) {
                for (int x = 0; x < 6; ++x) {
                    const double expected = oracles::window_sigma(img, x, y, window);
                    CHECK(std::abs(map.values[img.flat_index(x, y)] - expected) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("local contrast is translation-covariant away from borders") {
    std::mt19937_64 gen(27);
    const GrayImage img = oracles::random_image(gen, 7, 6);
    GrayImage shifted(7, 6);
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 7; ++x) {
            shifted.at(x, y) = img.at(x == 0 ? 0 : x - 1, y);
        }
    }
    const FeatureMap base = permutex::local_contrast(img, 3);
    const FeatureMap moved = permutex::local_contrast(shifted, 3);
    for (int y = 1; y < 5; ++y) {
        for (int x = 2; x < 6; ++x) {
            CHECK(moved.values[img.flat_index(x, y)] ==
                  doctest::Approx(base.values[img.flat_index(x - 1, y)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("even or non-positive windows are rejected") {
    const GrayImage img(3, 3);
    CHECK_THROWS_AS(permutex::local_contrast(img, 2), permutex::ParamError);
    CHECK_THROWS_AS(permutex::local_contrast(img, 0), permutex::ParamError);
    CHECK_THROWS_AS(permutex::local_contrast(img, -3), permutex::ParamError);
}

TEST_CASE("min_max_normalize rescales and advances the kind tag") {
    const FeatureMap raw = make_map(FeatureKind::ContrastRaw, 3, 1, {2.0, 4.0, 10.0});
    const FeatureMap norm = permutex::min_max_normalize(raw);
    CHECK(norm.kind == FeatureKind::ContrastNorm);
    CHECK(norm.values[0] == 0.0);
    CHECK(norm.values[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(norm.values[2] == 1.0);

    const FeatureMap imp = make_map(FeatureKind::Importance, 2, 1, {1.0, 1.0});
    const FeatureMap imp_norm = permutex::min_max_normalize(imp);
    CHECK(imp_norm.kind == FeatureKind::ImportanceNorm);
    CHECK(imp_norm.values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("importance of two all-zero maps is all zeros") {
    const FeatureMap freq = make_map(FeatureKind::FrequencyNorm, 2, 2, {0, 0, 0, 0});
    const FeatureMap contrast = make_map(FeatureKind::ContrastRaw, 2, 2, {0, 0, 0, 0});
    const FeatureMap imp = permutex::importance_map(freq, contrast);
    CHECK(imp.kind == FeatureKind::ImportanceNorm);
    CHECK(imp.values == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("importance endpoints survive both normalizations") {
    const FeatureMap freq = make_map(FeatureKind::FrequencyNorm, 2, 1, {0.0, 1.0});
    const FeatureMap contrast = make_map(FeatureKind::ContrastRaw, 2, 1, {0.0, 10.0});
    const FeatureMap imp = permutex::importance_map(freq, contrast);
    CHECK(imp.values[0] == 0.0);
    CHECK(imp.values[1] == 1.0);
}

TEST_CASE("importance map spans [0,1] and preserves the raw ordering") {
    std::mt19937_64 gen(28);
    std::vector<double> f(16), c(16);
    for (int i = 0; i < 16; ++i) {
        f[i] = static_cast<double>(gen() % 1024) / 1023.0;
        c[i] = static_cast<double>(gen() % 1024) / 4.0;
    }
    const FeatureMap freq = make_map(FeatureKind::FrequencyNorm, 4, 4, f);
    const FeatureMap contrast = make_map(FeatureKind::ContrastRaw, 4, 4, c);
    const FeatureMap imp = permutex::importance_map(freq, contrast);

    double lo = 2.0, hi = -1.0;
    for (double v : imp.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);

    const FeatureMap cn = permutex::min_max_normalize(contrast);
    std::vector<double> raw(16);
    for (int i = 0; i < 16; ++i) {
        raw[i] = (f[i] + cn.values[i]) / 2.0;
    }
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            if (raw[i] < raw[j]) {
                CHECK(imp.values[i] <= imp.values[j]);
            }
        }
    }
}

TEST_CASE("importance ordering is invariant under affine contrast rescale") {
    const std::vector<double> base = {0.25, 0.5, 0.125, 0.75, 0.375, 0.625};
    std::vector<double> scaled(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        scaled[i] = base[i] * 2.0 + 0.25;
    }
    const FeatureMap freq =
        make_map(FeatureKind::FrequencyNorm, 3, 2, {0.0, 0.5, 1.0, 0.25, 0.75, 0.125});
    const FeatureMap imp_a =
        permutex::importance_map(freq, make_map(FeatureKind::ContrastRaw, 3, 2, base));
    const FeatureMap imp_b =
        permutex::importance_map(freq, make_map(FeatureKind::ContrastRaw, 3, 2, scaled));
    CHECK(permutex::rank_pixels(imp_a).order == permutex::rank_pixels(imp_b).order);
}

TEST_CASE("importance map rejects mismatched shapes") {
    const FeatureMap freq = make_map(FeatureKind::FrequencyNorm, 2, 2, {0, 0, 0, 0});
    const FeatureMap contrast = make_map(FeatureKind::ContrastRaw, 2, 1, {0, 0});
    CHECK_THROWS_AS(permutex::importance_map(freq, contrast), permutex::ShapeError);
}

TEST_CASE("rank_pixels sorts descending") {
    const FeatureMap imp = make_map(FeatureKind::ImportanceNorm, 3, 1, {0.1, 0.9, 0.5});
    CHECK(permutex::rank_pixels(imp).order == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("rank_pixels breaks ties by ascending index") {
    const FeatureMap imp = make_map(FeatureKind::ImportanceNorm, 2, 2, {0.5, 0.5, 0.5, 0.5});
    CHECK(permutex::rank_pixels(imp).order == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("rank_pixels matches the selection-sort oracle") {
    std::mt19937_64 gen(29);
    std::vector<double> values(16);
    for (double& v : values) {
        v = static_cast<double>(gen() % 8) / 8.0;
    }
    const FeatureMap imp = make_map(FeatureKind::ImportanceNorm, 4, 4, values);
    CHECK(permutex::rank_pixels(imp).order == oracles::argsort_desc_stable(values));
}

TEST_CASE("rank_pixels always emits a permutation") {
    std::mt19937_64 gen(30);
    const FeatureMap imp = permutex::local_contrast(oracles::random_image(gen, 9, 4), 3);
    const ImportanceRanking ranking = permutex::rank_pixels(imp);
    std::vector<bool> seen(imp.values.size(), false);
    for (std::uint32_t idx : ranking.order) {
        REQUIRE(idx < seen.size());
        CHECK(!seen[idx]);
        seen[idx] = true;
    }
}
