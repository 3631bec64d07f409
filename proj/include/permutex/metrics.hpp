#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permutex/image.hpp"
#include "permutex/permutation.hpp"

namespace permutex {

enum class Direction {
    Horizontal,
    Vertical,
    Diagonal,
};

const char* to_string(Direction dir);

/// Pearson correlation over ALL in-bounds adjacent pairs for the
/// direction: (x,y)-(x+1,y), (x,y)-(x,y+1), or (x,y)-(x+1,y+1). Constant
/// images return 0 by the zero-variance convention. Throws ShapeError when
/// the image has fewer than 2 pixels along the direction.
double adjacent_correlation(const GrayImage& img, Direction dir);

struct GlcmParams {
    int levels = 8;
    int dy = 0;
    int dx = 1;

    bool operator==(const GlcmParams&) const = default;
};

/// Correlation statistic of the symmetrized, normalized gray-level
/// co-occurrence matrix. Intensities quantize to min(i*levels/256,
/// levels-1). Zero marginal variance (or no in-bounds pairs) returns 0.
/// levels outside [2,256] throws ParamError.
double glcm_correlation(const GrayImage& img, const GlcmParams& params = {});

/// 2D Pearson correlation of two equal-shaped images; 0 when either image
/// is constant. Throws ShapeError on shape mismatch.
double corr2(const GrayImage& a, const GrayImage& b);

struct ScatterPairs {
    Direction direction = Direction::Horizontal;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
};

/// Deterministic seeded sample (without replacement) of adjacent pairs.
/// sample_n = 0 takes every in-bounds pair in row-major order; sample_n
/// beyond the available count throws ParamError.
ScatterPairs correlation_scatter(const GrayImage& img, Direction dir, std::size_t sample_n,
                                 std::uint64_t seed);

/// One comparison-table row: the three directional coefficients and the
/// GLCM correlation of the permuted image, plus corr2 against the
/// original. degenerate is set when any statistic fell back to the
/// zero-variance (or undersized-direction) convention.
struct MetricsReport {
    std::string scheme;
    double horizontal = 0.0;
    double vertical = 0.0;
    double diagonal = 0.0;
    double glcm_correlation = 0.0;
    double corr2_with_original = 0.0;
    bool degenerate = false;
    GlcmParams glcm;
    Provenance provenance;
};

/// Fills a full report for the permuted image. Undersized directions
/// contribute 0 with the degenerate flag instead of throwing, so reports
/// work on degenerate shapes such as 1xN. Throws ShapeError when the two
/// images differ in shape.
MetricsReport analysis_report(const GrayImage& original, const GrayImage& permuted,
                              const std::string& scheme, const GlcmParams& glcm = {});

} // namespace permutex
