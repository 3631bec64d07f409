#include "permutex/pgm_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <vector>

#include "file_util.hpp"
#include "permutex/errors.hpp"

namespace permutex {

namespace {

bool is_pnm_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Cursor over the raw file bytes. Header parsing in PNM is whitespace
/// separated, with '#' starting a comment that runs to end of line.
class ByteCursor {
public:
    explicit ByteCursor(const std::vector<unsigned char>& bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return pos_; }
    bool eof() const noexcept { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            unsigned char c = bytes_[pos_];
            if (is_pnm_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    /// Reads a non-negative decimal integer token.
    std::uint64_t read_uint(const char* what) {
        skip_space_and_comments();
        if (eof()) {
            throw FormatError(std::string("unexpected end of file while reading ") + what,
                              pos_);
        }
        if (!std::isdigit(bytes_[pos_])) {
            throw FormatError(std::string("expected digit for ") + what, pos_);
        }
        std::uint64_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw FormatError(std::string(what) + " is out of range", pos_);
            }
            ++pos_;
        }
        return value;
    }

    /// Consumes the single whitespace byte that separates the header from
    /// binary pixel data. A comment is allowed before it.
    void consume_raster_separator() {
        if (eof() || !is_pnm_space(bytes_[pos_])) {
            throw FormatError("expected whitespace before pixel data", pos_);
        }
        ++pos_;
    }

    const unsigned char* data() const noexcept { return bytes_.data(); }
    std::size_t size() const noexcept { return bytes_.size(); }
    void advance(std::size_t n) noexcept { pos_ += n; }

private:
    const std::vector<unsigned char>& bytes_;
    std::size_t pos_ = 0;
};

} // namespace

GrayImage load_pgm(const std::string& path) {
    const std::vector<unsigned char> bytes = detail::read_file_bytes(path);
    ByteCursor cur(bytes);

    if (cur.size() < 2) {
        throw FormatError("file too short for a PGM magic number", 0);
    }
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    bool binary;
    if (m0 == 'P' && m1 == '5') {
        binary = true;
    } else if (m0 == 'P' && m1 == '2') {
        binary = false;
    } else {
        throw FormatError("not a PGM file (expected magic P5 or P2)", 0);
    }
    cur.advance(2);

    const std::uint64_t width = cur.read_uint("width");
    const std::uint64_t height = cur.read_uint("height");
    const std::size_t maxval_offset = cur.offset();
    const std::uint64_t maxval = cur.read_uint("maxval");

    if (width == 0 || height == 0) {
        throw FormatError("image dimensions must be positive", maxval_offset);
    }
    if (maxval == 0) {
        throw FormatError("maxval must be positive", maxval_offset);
    }
    if (maxval > 255) {
        throw UnsupportedDepthError("maxval " + std::to_string(maxval) +
                                        " exceeds the supported 8-bit depth",
                                    maxval_offset);
    }
    if (width * height > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError("image has too many pixels", maxval_offset);
    }

    const std::size_t count = static_cast<std::size_t>(width * height);
    std::vector<std::uint8_t> pixels(count);

    if (binary) {
        cur.consume_raster_separator();
        if (cur.size() - cur.offset() < count) {
            throw FormatError("pixel data truncated: expected " + std::to_string(count) +
                                  " bytes, found " + std::to_string(cur.size() - cur.offset()),
                              cur.offset());
        }
        const unsigned char* raster = cur.data() + cur.offset();
        for (std::size_t i = 0; i < count; ++i) {
            if (raster[i] > maxval) {
                throw FormatError("pixel value " + std::to_string(raster[i]) +
                                      " exceeds maxval " + std::to_string(maxval),
                                  cur.offset() + i);
            }
            pixels[i] = raster[i];
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = cur.offset();
            const std::uint64_t v = cur.read_uint("pixel value");
            if (v > maxval) {
                throw FormatError("pixel value " + std::to_string(v) + " exceeds maxval " +
                                      std::to_string(maxval),
                                  at);
            }
            pixels[i] = static_cast<std::uint8_t>(v);
        }
    }

    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixel_count()));
    if (!out) {
        throw IoError("failed to write " + path);
    }
}

} // namespace permutex
