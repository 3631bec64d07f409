#pragma once

#include <complex>
#include <vector>

namespace permutex::detail {

/// In-place forward DFT of arbitrary length. Power-of-two lengths use the
/// iterative radix-2 algorithm; other lengths go through Bluestein's
/// chirp-z transform, which reduces them to a power-of-two convolution.
void fft_forward(std::vector<std::complex<double>>& data);

} // namespace permutex::detail
