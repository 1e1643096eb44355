#pragma once

#include <complex>
#include <vector>

namespace a2e {

// In-place radix-2 Cooley-Tukey FFT. Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

// FFT of a real signal zero-padded (or truncated) to n points.
std::vector<std::complex<double>> fft_real(const std::vector<double>& x,
                                           int n);

bool is_power_of_two(int n);

}  // namespace a2e
