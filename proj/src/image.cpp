#include "permutex/image.hpp"

#include <limits>
#include <string>

#include "permutex/errors.hpp"

namespace permutex {

namespace {

void check_shape(int width, int height) {
    if (width < 1 || height < 1) {
        throw ShapeError("image dimensions must be at least 1x1, got " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
    const auto w = static_cast<std::uint64_t>(width);
    const auto h = static_cast<std::uint64_t>(height);
    if (w * h > std::numeric_limits<std::uint32_t>::max()) {
        throw ShapeError("image has too many pixels: " + std::to_string(w * h));
    }
}

} // namespace

GrayImage::GrayImage(int width, int height) : width_(width), height_(height) {
    check_shape(width, height);
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_shape(width, height);
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pixels_.size() != expected) {
        throw ShapeError("pixel buffer has " + std::to_string(pixels_.size()) +
                         " entries, expected " + std::to_string(expected));
    }
}

FlatVector flatten(const GrayImage& img) {
    return FlatVector{img.pixels(), img.width(), img.height()};
}

GrayImage unflatten(const FlatVector& v) {
    return GrayImage(v.width, v.height, v.values);
}

std::array<std::uint64_t, 256> histogram(const GrayImage& img) {
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t p : img.pixels()) {
        ++counts[p];
    }
    return counts;
}

} // namespace permutex
