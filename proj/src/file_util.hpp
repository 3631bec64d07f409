#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "permutex/errors.hpp"

namespace permutex::detail {

inline std::vector<unsigned char> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path + " for reading");
    }
    std::vector<unsigned char> bytes;
    in.seekg(0, std::ios::end);
    const auto end = in.tellg();
    if (end > 0) {
        bytes.resize(static_cast<std::size_t>(end));
        in.seekg(0, std::ios::beg);
        in.read(reinterpret_cast<char*>(bytes.data()), end);
        if (!in) {
            throw IoError("failed to read " + path);
        }
    }
    return bytes;
}

inline void write_file_bytes(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw IoError("failed to write " + path);
    }
}

} // namespace permutex::detail
