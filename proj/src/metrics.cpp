#include "permutex/metrics.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "permutex/errors.hpp"
#include "rng_util.hpp"

namespace permutex {

namespace {

struct Offset {
    int dx;
    int dy;
};

Offset direction_offset(Direction dir) {
    switch (dir) {
    case Direction::Horizontal: return {1, 0};
    case Direction::Vertical: return {0, 1};
    case Direction::Diagonal: return {1, 1};
    }
    return {1, 0};
}

template <typename Fn>
void for_each_adjacent_pair(const GrayImage& img, Direction dir, Fn&& fn) {
    const Offset off = direction_offset(dir);
    const int w = img.width();
    const int h = img.height();
    for (int y = 0; y + off.dy < h; ++y) {
        for (int x = 0; x + off.dx < w; ++x) {
            fn(img.at(x, y), img.at(x + off.dx, y + off.dy));
        }
    }
}

/// Pearson over a pair stream, two passes. degenerate reports the
/// zero-variance fallback.
template <typename PairSource>
double pearson_of_pairs(PairSource&& source, bool* degenerate) {
    std::size_t count = 0;
    double sum_a = 0.0;
    double sum_b = 0.0;
    source([&](double a, double b) {
        ++count;
        sum_a += a;
        sum_b += b;
    });
    if (count == 0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    const double mean_a = sum_a / static_cast<double>(count);
    const double mean_b = sum_b / static_cast<double>(count);
    double cov = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    source([&](double a, double b) {
        const double da = a - mean_a;
        const double db = b - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    });
    if (var_a == 0.0 || var_b == 0.0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return cov / std::sqrt(var_a * var_b);
}

void check_direction_size(const GrayImage& img, Direction dir) {
    const Offset off = direction_offset(dir);
    if ((off.dx != 0 && img.width() < 2) || (off.dy != 0 && img.height() < 2)) {
        throw ShapeError(std::string("image too small for ") + to_string(dir) +
                         " pairs: " + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()));
    }
}

bool direction_fits(const GrayImage& img, Direction dir) {
    const Offset off = direction_offset(dir);
    return (off.dx == 0 || img.width() >= 2) && (off.dy == 0 || img.height() >= 2);
}

double adjacent_correlation_impl(const GrayImage& img, Direction dir, bool* degenerate) {
    check_direction_size(img, dir);
    return pearson_of_pairs(
        [&](auto&& sink) {
            for_each_adjacent_pair(img, dir, [&](std::uint8_t a, std::uint8_t b) {
                sink(static_cast<double>(a), static_cast<double>(b));
            });
        },
        degenerate);
}

double glcm_correlation_impl(const GrayImage& img, const GlcmParams& params, bool* degenerate) {
    if (params.levels < 2 || params.levels > 256) {
        throw ParamError("GLCM levels must lie in [2,256], got " +
                         std::to_string(params.levels));
    }
    const int levels = params.levels;
    const int w = img.width();
    const int h = img.height();

    std::vector<int> quantized(img.pixel_count());
    for (std::size_t i = 0; i < quantized.size(); ++i) {
        const int q = static_cast<int>(img.pixels()[i]) * levels / 256;
        quantized[i] = q < levels - 1 ? q : levels - 1;
    }

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(levels) * levels, 0);
    std::uint64_t pairs = 0;
    for (int y = 0; y < h; ++y) {
        const int ny = y + params.dy;
        if (ny < 0 || ny >= h) continue;
        for (int x = 0; x < w; ++x) {
            const int nx = x + params.dx;
            if (nx < 0 || nx >= w) continue;
            const int qi = quantized[img.flat_index(x, y)];
            const int qj = quantized[img.flat_index(nx, ny)];
            ++counts[static_cast<std::size_t>(qi) * levels + qj];
            ++pairs;
        }
    }
    if (pairs == 0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }

    const double total = 2.0 * static_cast<double>(pairs);
    std::vector<double> p(static_cast<std::size_t>(levels) * levels);
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < levels; ++j) {
            const std::size_t ij = static_cast<std::size_t>(i) * levels + j;
            const std::size_t ji = static_cast<std::size_t>(j) * levels + i;
            p[ij] = (static_cast<double>(counts[ij]) + static_cast<double>(counts[ji])) / total;
        }
    }

    double mean_i = 0.0;
    double mean_j = 0.0;
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < levels; ++j) {
            const double prob = p[static_cast<std::size_t>(i) * levels + j];
            mean_i += i * prob;
            mean_j += j * prob;
        }
    }
    double var_i = 0.0;
    double var_j = 0.0;
    double cross = 0.0;
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < levels; ++j) {
            const double prob = p[static_cast<std::size_t>(i) * levels + j];
            var_i += (i - mean_i) * (i - mean_i) * prob;
            var_j += (j - mean_j) * (j - mean_j) * prob;
            cross += (i - mean_i) * (j - mean_j) * prob;
        }
    }
    if (var_i == 0.0 || var_j == 0.0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return cross / (std::sqrt(var_i) * std::sqrt(var_j));
}

double corr2_impl(const GrayImage& a, const GrayImage& b, bool* degenerate) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw ShapeError("corr2 needs equal shapes, got " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
    }
    return pearson_of_pairs(
        [&](auto&& sink) {
            for (std::size_t i = 0; i < a.pixel_count(); ++i) {
                sink(static_cast<double>(a.pixels()[i]), static_cast<double>(b.pixels()[i]));
            }
        },
        degenerate);
}

} // namespace

const char* to_string(Direction dir) {
    switch (dir) {
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
    case Direction::Diagonal: return "diagonal";
    }
    return "unknown";
}

double adjacent_correlation(const GrayImage& img, Direction dir) {
    return adjacent_correlation_impl(img, dir, nullptr);
}

double glcm_correlation(const GrayImage& img, const GlcmParams& params) {
    return glcm_correlation_impl(img, params, nullptr);
}

double corr2(const GrayImage& a, const GrayImage& b) {
    return corr2_impl(a, b, nullptr);
}

ScatterPairs correlation_scatter(const GrayImage& img, Direction dir, std::size_t sample_n,
                                 std::uint64_t seed) {
    ScatterPairs result;
    result.direction = dir;
    for_each_adjacent_pair(img, dir, [&](std::uint8_t a, std::uint8_t b) {
        result.pairs.emplace_back(a, b);
    });
    if (sample_n == 0) {
        return result;
    }
    if (sample_n > result.pairs.size()) {
        throw ParamError("requested " + std::to_string(sample_n) + " scatter pairs, only " +
                         std::to_string(result.pairs.size()) + " available");
    }
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < sample_n; ++i) {
        const std::size_t j = i + detail::bounded_uniform(gen, result.pairs.size() - i);
        std::swap(result.pairs[i], result.pairs[j]);
    }
    result.pairs.resize(sample_n);
    return result;
}

MetricsReport analysis_report(const GrayImage& original, const GrayImage& permuted,
                              const std::string& scheme, const GlcmParams& glcm) {
    if (original.width() != permuted.width() || original.height() != permuted.height()) {
        throw ShapeError("original and permuted shapes differ");
    }
    MetricsReport report;
    report.scheme = scheme;
    report.glcm = glcm;

    bool degenerate = false;
    const Direction dirs[] = {Direction::Horizontal, Direction::Vertical, Direction::Diagonal};
    double* slots[] = {&report.horizontal, &report.vertical, &report.diagonal};
    for (int i = 0; i < 3; ++i) {
        if (direction_fits(permuted, dirs[i])) {
            *slots[i] = adjacent_correlation_impl(permuted, dirs[i], &degenerate);
        } else {
            *slots[i] = 0.0;
            degenerate = true;
        }
    }
    report.glcm_correlation = glcm_correlation_impl(permuted, glcm, &degenerate);
    report.corr2_with_original = corr2_impl(original, permuted, &degenerate);
    report.degenerate = degenerate;
    return report;
}

} // namespace permutex
