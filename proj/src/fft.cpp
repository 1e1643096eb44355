#include "a2e/fft.hpp"

#include <cmath>
#include <numbers>

#include "a2e/errors.hpp"

namespace a2e {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_inplace(std::vector<std::complex<double>>& data) {
  const std::size_t n = data.size();
  if (!is_power_of_two(static_cast<int>(n)))
    throw Error("fft: size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = data[i + k];
        const auto v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& x,
                                           int n) {
  std::vector<std::complex<double>> data(static_cast<std::size_t>(n));
  const std::size_t m = std::min(x.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m; ++i) data[i] = {x[i], 0.0};
  fft_inplace(data);
  return data;
}

}  // namespace a2e
