#include "permutex/feature_extraction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fft.hpp"
#include "permutex/errors.hpp"

namespace permutex {

namespace {

void min_max_in_place(std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo;
    const double max = *hi;
    if (max == min) {
        std::fill(values.begin(), values.end(), 0.0);
        return;
    }
    const double span = max - min;
    for (double& v : values) {
        v = (v - min) / span;
    }
}

} // namespace

const char* to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::FrequencyNorm: return "frequency_norm";
    case FeatureKind::ContrastRaw: return "contrast_raw";
    case FeatureKind::ContrastNorm: return "contrast_norm";
    case FeatureKind::Importance: return "importance";
    case FeatureKind::ImportanceNorm: return "importance_norm";
    }
    return "unknown";
}

ComplexSpectrum::ComplexSpectrum(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw ShapeError("spectrum dimensions must be at least 1x1");
    }
    entries_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                    std::complex<double>(0.0, 0.0));
}

ComplexSpectrum dft2(const GrayImage& img) {
    const int w = img.width();
    const int h = img.height();
    ComplexSpectrum spec(w, h);

    std::vector<std::complex<double>> row(static_cast<std::size_t>(w));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            row[static_cast<std::size_t>(x)] =
                std::complex<double>(static_cast<double>(img.at(x, y)), 0.0);
        }
        detail::fft_forward(row);
        for (int v = 0; v < w; ++v) {
            spec.entry(y, v) = row[static_cast<std::size_t>(v)];
        }
    }

    std::vector<std::complex<double>> col(static_cast<std::size_t>(h));
    for (int v = 0; v < w; ++v) {
        for (int y = 0; y < h; ++y) {
            col[static_cast<std::size_t>(y)] = spec.entry(y, v);
        }
        detail::fft_forward(col);
        for (int u = 0; u < h; ++u) {
            spec.entry(u, v) = col[static_cast<std::size_t>(u)];
        }
    }

    return spec;
}

ComplexSpectrum fft_shift(const ComplexSpectrum& spec) {
    const int w = spec.width();
    const int h = spec.height();
    ComplexSpectrum out(w, h);
    const int du = h / 2;
    const int dv = w / 2;
    for (int u = 0; u < h; ++u) {
        for (int v = 0; v < w; ++v) {
            out.entry((u + du) % h, (v + dv) % w) = spec.entry(u, v);
        }
    }
    return out;
}

FeatureMap magnitude_log_norm(const ComplexSpectrum& spec) {
    FeatureMap map;
    map.kind = FeatureKind::FrequencyNorm;
    map.width = spec.width();
    map.height = spec.height();
    map.values.reserve(spec.entries().size());
    for (const std::complex<double>& e : spec.entries()) {
        map.values.push_back(std::log(std::abs(e) + 1.0));
    }
    min_max_in_place(map.values);
    return map;
}

FeatureMap local_contrast(const GrayImage& img, int window) {
    if (window < 1 || window % 2 == 0) {
        throw ParamError("contrast window must be an odd positive size, got " +
                         std::to_string(window));
    }
    const int w = img.width();
    const int h = img.height();
    const int half = window / 2;
    const double count = static_cast<double>(window) * static_cast<double>(window);

    FeatureMap map;
    map.kind = FeatureKind::ContrastRaw;
    map.width = w;
    map.height = h;
    map.values.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            for (int dy = -half; dy <= half; ++dy) {
                const int yy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -half; dx <= half; ++dx) {
                    const int xx = std::clamp(x + dx, 0, w - 1);
                    sum += static_cast<double>(img.at(xx, yy));
                }
            }
            const double mean = sum / count;
            double sq = 0.0;
            for (int dy = -half; dy <= half; ++dy) {
                const int yy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -half; dx <= half; ++dx) {
                    const int xx = std::clamp(x + dx, 0, w - 1);
                    const double d = static_cast<double>(img.at(xx, yy)) - mean;
                    sq += d * d;
                }
            }
            map.values[img.flat_index(x, y)] = std::sqrt(sq / count);
        }
    }

    return map;
}

FeatureMap min_max_normalize(const FeatureMap& map) {
    FeatureMap out = map;
    min_max_in_place(out.values);
    if (map.kind == FeatureKind::ContrastRaw) {
        out.kind = FeatureKind::ContrastNorm;
    } else if (map.kind == FeatureKind::Importance) {
        out.kind = FeatureKind::ImportanceNorm;
    }
    return out;
}

FeatureMap importance_map(const FeatureMap& freq, const FeatureMap& contrast) {
    if (freq.width != contrast.width || freq.height != contrast.height) {
        throw ShapeError("feature map shapes differ: " + std::to_string(freq.width) + "x" +
                         std::to_string(freq.height) + " vs " + std::to_string(contrast.width) +
                         "x" + std::to_string(contrast.height));
    }

    std::vector<double> cn = contrast.values;
    min_max_in_place(cn);

    FeatureMap out;
    out.kind = FeatureKind::ImportanceNorm;
    out.width = freq.width;
    out.height = freq.height;
    out.values.resize(freq.values.size());
    for (std::size_t i = 0; i < freq.values.size(); ++i) {
        out.values[i] = (freq.values[i] + cn[i]) / 2.0;
    }
    min_max_in_place(out.values);
    return out;
}

ImportanceRanking rank_pixels(const FeatureMap& imp) {
    ImportanceRanking ranking;
    ranking.order.resize(imp.values.size());
    std::iota(ranking.order.begin(), ranking.order.end(), 0u);
    std::stable_sort(ranking.order.begin(), ranking.order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return imp.values[a] > imp.values[b];
                     });
    return ranking;
}

} // namespace permutex
