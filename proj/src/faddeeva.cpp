#include "faddeeva.hpp"

#include <array>
#include <cmath>

namespace atsim::detail {

namespace {

using Complex = std::complex<double>;

constexpr long double kPiL = 3.14159265358979323846264338328L;
constexpr int kN = 36;          // series length
constexpr int kM = 2 * kN;      // half the sampling grid
constexpr int kM2 = 4 * kN;     // sampling points

struct WeidemanTable {
  double length = 0.0;            // the L parameter
  std::array<double, kN> coeff{};  // polyval order: coeff[0] Z^(N-1) + ...

  WeidemanTable() {
    length = std::sqrt(kN / std::sqrt(2.0));
    // sampled auxiliary function on the tan(theta/2) grid, fftshifted
    std::array<long double, kM2> x{};
    for (int j = -kM + 1; j <= kM - 1; ++j) {
      const long double theta = static_cast<long double>(j) * kPiL / kM;
      const long double t = length * std::tan(theta / 2.0L);
      x[(j + kM2) % kM2] =
          (length * length + t * t) * std::exp(-t * t);
    }
    x[kM] = 0.0L;  // theta = +-pi limit

    // direct DFT; runs once, size 144
    std::array<double, kN + 1> a{};
    for (int k = 0; k <= kN; ++k) {
      long double re = 0.0L;
      for (int j = 0; j < kM2; ++j) {
        re += x[j] * std::cos(2.0L * kPiL * j * k / kM2);
      }
      a[k] = static_cast<double>(re / kM2);
    }
    for (int i = 0; i < kN; ++i) coeff[i] = a[kN - i];
  }
};

const WeidemanTable& table() {
  static const WeidemanTable t;
  return t;
}

}  // namespace

Complex faddeeva_w(Complex z) {
  const auto& t = table();
  const double l = t.length;
  const Complex iz(-z.imag(), z.real());
  const Complex denom = l - iz;
  const Complex ratio = (l + iz) / denom;
  Complex p = 0.0;
  for (int i = 0; i < kN; ++i) p = p * ratio + t.coeff[i];
  return 2.0 * p / (denom * denom) + (1.0 / std::sqrt(M_PI)) / denom;
}

}  // namespace atsim::detail
