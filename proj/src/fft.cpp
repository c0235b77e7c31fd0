#include "fft.hpp"

#include <cmath>
#include <stdexcept>

namespace atsim::detail {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// chirp-z transform for arbitrary sizes
void fft_bluestein(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n + 1) m <<= 1;

  std::vector<std::complex<double>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2/2 mod n, computed in integers to keep the phase exact
    const unsigned long long kk = static_cast<unsigned long long>(k) * k % (2 * n);
    const double ang = sign * kTwoPi * static_cast<double>(kk) / (2.0 * n);
    chirp[k] = {std::cos(ang), std::sin(ang)};
  }

  std::vector<std::complex<double>> x(m, 0.0), y(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = std::conj(chirp[k]);
    if (k != 0) y[m - k] = std::conj(chirp[k]);
  }
  fft_pow2(x, -1);
  fft_pow2(y, -1);
  for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
  fft_pow2(x, +1);
  for (std::size_t k = 0; k < n; ++k)
    a[k] = x[k] * chirp[k] / static_cast<double>(m);
}

}  // namespace

void fft(std::vector<std::complex<double>>& data, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("fft: sign must be +1 or -1");
  if (data.size() < 2) return;
  if (is_pow2(data.size())) {
    fft_pow2(data, sign);
  } else {
    fft_bluestein(data, sign);
  }
}

}  // namespace atsim::detail
