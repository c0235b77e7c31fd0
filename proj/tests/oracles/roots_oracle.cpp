#include "roots_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace atsim::oracle {

namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

// eigenvalue of [[a, b], [c, d]] closer to d
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex tr = a + d;
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = 0.5 * (tr - disc);
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

struct Givens {
  Complex a, b;  // the pair the rotation annihilates
  double r;
};

}  // namespace

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) return {};
  if (n == 1) return {-coeffs[0]};

  Matrix m(n, std::vector<Complex>(n, 0.0));
  for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = 1.0;
  for (std::size_t i = 0; i < n; ++i) m[i][n - 1] = -coeffs[i];

  std::vector<Complex> roots;
  std::size_t active = n;
  int guard = 0;
  while (active > 1) {
    if (++guard > 10000)
      throw std::runtime_error("companion_roots: QR did not converge");

    const double scale = std::abs(m[active - 2][active - 2]) +
                         std::abs(m[active - 1][active - 1]);
    if (std::abs(m[active - 1][active - 2]) <= 1e-15 * (scale + 1e-300)) {
      roots.push_back(m[active - 1][active - 1]);
      --active;
      continue;
    }

    const Complex shift =
        wilkinson_shift(m[active - 2][active - 2], m[active - 2][active - 1],
                        m[active - 1][active - 2], m[active - 1][active - 1]);
    for (std::size_t i = 0; i < active; ++i) m[i][i] -= shift;

    // QR by Givens rotations on the Hessenberg subdiagonal, then RQ
    std::vector<Givens> rots(active - 1);
    for (std::size_t k = 0; k + 1 < active; ++k) {
      const Complex a = m[k][k];
      const Complex b = m[k + 1][k];
      const double r = std::hypot(std::abs(a), std::abs(b));
      rots[k] = {a, b, r};
      if (r == 0.0) continue;
      for (std::size_t j = k; j < active; ++j) {
        const Complex top = m[k][j];
        const Complex bot = m[k + 1][j];
        m[k][j] = (std::conj(a) * top + std::conj(b) * bot) / r;
        m[k + 1][j] = (-b * top + a * bot) / r;
      }
    }
    for (std::size_t k = 0; k + 1 < active; ++k) {
      const auto& [a, b, r] = rots[k];
      if (r == 0.0) continue;
      for (std::size_t i = 0; i < active; ++i) {
        const Complex left = m[i][k];
        const Complex right = m[i][k + 1];
        m[i][k] = (left * a + right * b) / r;
        m[i][k + 1] = (-left * std::conj(b) + right * std::conj(a)) / r;
      }
    }
    for (std::size_t i = 0; i < active; ++i) m[i][i] += shift;
  }
  roots.push_back(m[0][0]);
  return roots;
}

}  // namespace atsim::oracle
