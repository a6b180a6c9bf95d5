#pragma once

#include <complex>
#include <vector>

namespace cdc::detail {

/// Unnormalized DFT, natural bin order. Forward computes
/// X_k = sum_n x_n e^{-2 pi i k n / N}; inverse omits the 1/N factor.
void fft(const std::complex<double>* in, std::complex<double>* out, int n, bool inverse);

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, bool inverse);

/// Angular-frequency grid in natural FFT order for sample spacing dt.
std::vector<double> fft_omega_grid(int n, double dt);

bool is_power_of_two(int n);

} // namespace cdc::detail
