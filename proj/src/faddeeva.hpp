#pragma once

#include <complex>

namespace atsim::detail {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0
/// (Weideman's rational series; ~1e-14 accurate over the upper half plane).
std::complex<double> faddeeva_w(std::complex<double> z);

}  // namespace atsim::detail
