#pragma once

#include <complex>
#include <vector>

namespace atsim::detail {

/// In-place unnormalized DFT: X_k = sum_j x_j exp(sign * 2 pi i j k / N).
/// Radix-2 for power-of-two sizes, Bluestein otherwise.
void fft(std::vector<std::complex<double>>& data, int sign);

}  // namespace atsim::detail
