#include "trigbvp/fft.hpp"

#include <cmath>
#include <numbers>

#include "trigbvp/errors.hpp"

namespace trigbvp {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw InvalidInputError("fft_radix2: length must be a power of two");
  }
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> even = data[i + k];
        const std::complex<double> odd = data[i + k + len / 2] * w;
        data[i + k] = even + odd;
        data[i + k + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> inverse_dft(std::vector<std::complex<double>> in) {
  const double n = static_cast<double>(in.size());
  fft_radix2(in, +1);
  for (auto& v : in) v /= n;
  return in;
}

}  // namespace trigbvp
