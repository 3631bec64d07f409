#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace permutex::detail {

/// Indices that would sort v ascending; equal values keep ascending-index
/// order (stable), which the key-derivation bijection relies on.
template <typename T>
std::vector<std::uint32_t> stable_argsort(const std::vector<T>& v) {
    std::vector<std::uint32_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return v[a] < v[b]; });
    return idx;
}

} // namespace permutex::detail
