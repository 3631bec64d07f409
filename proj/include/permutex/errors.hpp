#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permutex {

// Invalid user input: bad parameters, mismatched shapes, malformed files.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParamError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Malformed file content; carries the offset of the first offending byte.
class FormatError : public ValidationError {
public:
    FormatError(const std::string& what, std::size_t byte_offset)
        : ValidationError(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Pixel depth beyond 8 bits.
class UnsupportedDepthError : public FormatError {
public:
    using FormatError::FormatError;
};

// Filesystem-level failure: missing file, unwritable path, short write.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace permutex
