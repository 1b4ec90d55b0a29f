#pragma once

// In-place iterative radix-2 FFT. Only what the phase basis needs:
// power-of-two lengths, unitary scaling applied by the caller.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hyperstate/error.hpp"

namespace hyperstate::fft {

enum class Direction { Forward, Inverse };

/// Forward: X_m = sum_n x_n e^{-2 pi i m n / N}. Inverse uses e^{+...}. No scaling.
inline void transform(std::span<std::complex<double>> x, Direction dir) {
  const std::size_t n = x.size();
  if (!detail::is_power_of_two(n)) detail::fail_input("FFT length must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  // Twiddles evaluated directly (not by recurrence) to keep the error at O(eps log N).
  const double sign = dir == Direction::Forward ? -1.0 : 1.0;
  std::vector<std::complex<double>> roots(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    roots[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const auto t = roots[k * stride] * x[start + k + half];
        x[start + k + half] = x[start + k] - t;
        x[start + k] += t;
      }
    }
  }
}

}  // namespace hyperstate::fft
