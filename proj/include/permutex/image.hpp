#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace permutex {

/// 8-bit grayscale image. Pixels are stored row-major: the pixel at
/// column x, row y (both 0-based) lives at flat index z = y * width + x.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    std::size_t flat_index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    std::uint8_t at(int x, int y) const { return pixels_[flat_index(x, y)]; }
    std::uint8_t& at(int x, int y) { return pixels_[flat_index(x, y)]; }

    const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }
    std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Row-major flattening of an image together with its origin shape, so the
/// image can be restored exactly.
struct FlatVector {
    std::vector<std::uint8_t> values;
    int width = 0;
    int height = 0;
};

FlatVector flatten(const GrayImage& img);

/// Exact inverse of flatten. Throws ShapeError if values.size() does not
/// match the declared shape.
GrayImage unflatten(const FlatVector& v);

std::array<std::uint64_t, 256> histogram(const GrayImage& img);

} // namespace permutex
