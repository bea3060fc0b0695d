#ifndef TRIGBVP_FFT_HPP
#define TRIGBVP_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace trigbvp {

bool is_power_of_two(std::size_t n);

// In-place radix-2 transform of a power-of-two-length buffer.
// sign = -1 gives the forward DFT sum_k x_k exp(-2*pi*i*j*k/N),
// sign = +1 the unscaled inverse kernel; neither applies the 1/N factor.
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

// Inverse DFT with the 1/N normalization:
// out_j = (1/N) * sum_k in_k * exp(+2*pi*i*j*k/N).
std::vector<std::complex<double>> inverse_dft(std::vector<std::complex<double>> in);

}  // namespace trigbvp

#endif  // TRIGBVP_FFT_HPP
