#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "permutex/image.hpp"

namespace permutex {

/// 2D frequency-domain view of an image. entry(u, v) addresses row
/// frequency u in [0, height) and column frequency v in [0, width),
/// stored row-major like the source image.
class ComplexSpectrum {
public:
    ComplexSpectrum() = default;
    ComplexSpectrum(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    std::complex<double> entry(int u, int v) const {
        return entries_[static_cast<std::size_t>(u) * width_ + v];
    }
    std::complex<double>& entry(int u, int v) {
        return entries_[static_cast<std::size_t>(u) * width_ + v];
    }

    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::complex<double>> entries_;
};

enum class FeatureKind {
    FrequencyNorm,
    ContrastRaw,
    ContrastNorm,
    Importance,
    ImportanceNorm,
};

const char* to_string(FeatureKind kind);

/// Real-valued per-pixel feature map, row-major. Kinds tagged *Norm hold
/// values in [0,1]; contrast_raw holds nonnegative standard deviations.
struct FeatureMap {
    FeatureKind kind = FeatureKind::ContrastRaw;
    int width = 0;
    int height = 0;
    std::vector<double> values;
};

/// Pixel flat indices ordered from most to least important. Ties keep
/// ascending flat-index order so the ranking is fully deterministic.
struct ImportanceRanking {
    std::vector<std::uint32_t> order;
};

/// Forward 2D DFT (no normalization):
/// entry(u,v) = sum over rows y, cols x of I(x,y)*exp(-2*pi*i*(u*y/H + v*x/W)).
ComplexSpectrum dft2(const GrayImage& img);

/// Moves the zero-frequency entry to (floor(H/2), floor(W/2)) by circular
/// shift, the usual centered-spectrum layout.
ComplexSpectrum fft_shift(const ComplexSpectrum& spec);

/// Per entry: ln(|entry| + 1), then min-max normalized to [0,1].
/// A constant map normalizes to all zeros.
FeatureMap magnitude_log_norm(const ComplexSpectrum& spec);

/// Population standard deviation of the window*window neighborhood around
/// each pixel, with replicate padding at the borders. window must be odd
/// and at least 1.
FeatureMap local_contrast(const GrayImage& img, int window = 3);

/// Min-max rescale to [0,1]; constant maps become all zeros. Kind advances
/// contrast_raw -> contrast_norm and importance -> importance_norm.
FeatureMap min_max_normalize(const FeatureMap& map);

/// Fuses the normalized frequency map with the contrast map: contrast is
/// min-max normalized first, the two are averaged per pixel, and the
/// average is min-max normalized again.
FeatureMap importance_map(const FeatureMap& freq, const FeatureMap& contrast);

/// Stable descending sort of the flattened map; returns original flat
/// indices in sorted order.
ImportanceRanking rank_pixels(const FeatureMap& imp);

} // namespace permutex
