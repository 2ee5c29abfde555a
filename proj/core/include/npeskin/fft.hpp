#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace npeskin {

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 transform. sign = -1: forward (e^{-i...}), sign = +1: inverse,
/// both unnormalized. Length must be a power of two.
void fft_radix2(std::span<std::complex<double>> data, int sign);

}  // namespace npeskin
