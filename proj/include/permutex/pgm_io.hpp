#pragma once

#include <string>

#include "permutex/image.hpp"

namespace permutex {

/// Reads a PGM file. Binary (P5) and ASCII (P2) variants are accepted;
/// '#' comments are honored anywhere whitespace may appear in the header.
/// Throws IoError if the file cannot be opened, FormatError on malformed
/// content (with the byte offset of the problem), and UnsupportedDepthError
/// when maxval exceeds 255.
GrayImage load_pgm(const std::string& path);

/// Writes a binary (P5) PGM with maxval 255 and no comments. The header is
/// exactly "P5\n<width> <height>\n255\n". Throws IoError on write failure.
void save_pgm(const GrayImage& img, const std::string& path);

} // namespace permutex
