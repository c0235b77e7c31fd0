#include "atsim/susceptibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "atsim/dressed.hpp"
#include "atsim/errors.hpp"
#include "faddeeva.hpp"
#include "parallel.hpp"

namespace atsim {

namespace {

using Complex = std::complex<double>;

// contraction of the double sum: probe amplitudes against the Green matrix
// at the given probe energy and control-beam Doppler shift
Complex contract(double delta_bar, const SchemeInstance& s,
                 double velocity_shift) {
  const Complex energy = delta_bar + (s.energy_n - s.energy_m);
  const GreenMatrix g = green_matrix(energy, s, velocity_shift);
  const Complex cn = s.probe_n;
  const Complex cnp = s.probe_n_prime;
  const Complex sum = std::conj(cn) * cn * g.nn +
                      std::conj(cn) * cnp * g.nnp +
                      std::conj(cnp) * cn * g.npn +
                      std::conj(cnp) * cnp * g.npnp;
  return -kChiScale * sum;
}

// roots of a complex polynomial of degree <= 3 (leading coefficients below
// the noise floor are stripped); closed forms plus a Newton polish
std::vector<Complex> poly_roots(std::array<Complex, 4> c) {
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return {};
  int degree = 3;
  while (degree > 0 && std::abs(c[degree]) <= 1e-13 * scale) --degree;

  std::vector<Complex> roots;
  if (degree == 1) {
    roots = {-c[0] / c[1]};
  } else if (degree == 2) {
    const Complex disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    const Complex q = std::abs(c[1] + disc) >= std::abs(c[1] - disc)
                          ? -0.5 * (c[1] + disc)
                          : -0.5 * (c[1] - disc);
    if (q == 0.0) return {Complex(0.0), Complex(0.0)};
    roots = {q / c[2], c[0] / q};
  } else if (degree == 3) {
    // depressed-cubic Cardano in complex arithmetic
    const Complex a = c[2] / c[3];
    const Complex b = c[1] / c[3];
    const Complex d = c[0] / c[3];
    const Complex p = b - a * a / 3.0;
    const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
    const Complex disc = std::sqrt(0.25 * q * q + p * p * p / 27.0);
    Complex u3 = -0.5 * q + disc;
    if (std::abs(u3) < std::abs(-0.5 * q - disc)) u3 = -0.5 * q - disc;
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex rot(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
      Complex w = u;
      for (int r = 0; r < k; ++r) w *= rot;
      const Complex y = w == 0.0 ? Complex(0.0) : w - p / (3.0 * w);
      roots.push_back(y - a / 3.0);
    }
  }

  // Newton polish on the stripped polynomial (simultaneous Horner)
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex val = c[degree], dval = 0.0;
      for (int k = degree - 1; k >= 0; --k) {
        dval = dval * r + val;
        val = val * r + c[k];
      }
      if (dval == 0.0) break;
      r -= val / dval;
    }
  }
  return roots;
}

// Gaussian average of 1/(s - z) over N(0, sigma): expressed through the
// complex probability function, with the conjugate reflection for poles
// below the axis
Complex gaussian_pole_integral(Complex pole, double sigma) {
  const double scale = sigma * std::sqrt(2.0);
  const Complex zeta = pole / scale;
  const Complex factor(0.0, std::sqrt(M_PI) / scale);
  if (zeta.imag() > 0.0) return factor * detail::faddeeva_w(zeta);
  if (zeta.imag() < 0.0)
    return std::conj(factor * detail::faddeeva_w(std::conj(zeta)));
  throw PoleEvaluationError(
      "Doppler average hit a susceptibility pole on the real velocity axis");
}

}  // namespace

Complex chi_at(double delta_bar, const SchemeInstance& scheme) {
  return contract(delta_bar, scheme, 0.0);
}

Complex chi_doppler(double delta_bar, const SchemeInstance& scheme,
                    const DopplerConfig& doppler) {
  if (doppler.quadrature_order < 1)
    throw std::invalid_argument("chi_doppler: quadrature_order must be >= 1");
  if (doppler.thermal_width < 0.0)
    throw std::invalid_argument("chi_doppler: thermal_width must be >= 0");
  if (doppler.thermal_width == 0.0) return chi_at(delta_bar, scheme);

  // The cold susceptibility is a rational function of the velocity shift s
  // (the probe detuning shifts by -s, the control by -s or +s with the beam
  // geometry), so the thermal average reduces to complex-probability-
  // function integrals, one per pole: exact for every width, independent of
  // quadrature order.
  const SchemeInstance& s = scheme;
  const Complex half(0.0, 0.5);
  const double e0 = delta_bar + (s.energy_n - s.energy_m);
  const double w0 = s.control.detuning + (s.energy_n - s.energy_m_prime);
  const Complex a0 = e0 - s.energy_n + half;        // A(s) = a0 - s
  const Complex c0 = e0 - s.energy_n_prime + half;  // C(s) = c0 - s
  const Complex b0 = e0 - w0;  // B(s) = b0 - lam s, two-photon detuning
  const double lam = doppler.copropagating ? 0.0 : 2.0;
  const double v2n = std::norm(s.coupling_n);
  const double v2np = std::norm(s.coupling_n_prime);
  const double cn2 = std::norm(s.probe_n);
  const double cnp2 = std::norm(s.probe_n_prime);

  std::vector<Complex> poles;
  std::vector<Complex> residues;
  if (v2n == 0.0 && v2np == 0.0) {
    // control off: two bare lines, assembled directly so the degenerate
    // two-photon factor never enters
    poles = {a0, c0};
    residues = {kChiScale * cn2, kChiScale * cnp2};
  } else {
    const Complex cross =
        std::conj(s.probe_n) * s.probe_n_prime * s.coupling_n *
            std::conj(s.coupling_n_prime) +
        std::conj(s.probe_n_prime) * s.probe_n * s.coupling_n_prime *
            std::conj(s.coupling_n);
    // common cubic P(s) = A B C - v'^2 A - v^2 C and the contraction
    // numerator; degeneracies (lambda variant, two-photon point) reduce the
    // degree and are absorbed by the root stripping. Genuine double roots do
    // not occur for physical schemes (the bare lines are split and damped).
    const std::array<Complex, 4> p = {
        b0 * a0 * c0 - v2np * a0 - v2n * c0,
        -b0 * (a0 + c0) - lam * a0 * c0 + v2n + v2np,
        b0 + lam * (a0 + c0),
        Complex(-lam),
    };
    const std::array<Complex, 3> num = {
        -kChiScale * (cn2 * (b0 * c0 - v2np) + cnp2 * (b0 * a0 - v2n) + cross),
        kChiScale * (cn2 * (b0 + lam * c0) + cnp2 * (b0 + lam * a0)),
        -kChiScale * lam * (cn2 + cnp2),
    };
    poles = poly_roots(p);
    for (const auto& z : poles) {
      const Complex nval = (num[2] * z + num[1]) * z + num[0];
      Complex dval = 0.0, val = p[3];
      for (int k = 2; k >= 0; --k) {
        dval = dval * z + val;
        val = val * z + p[k];
      }
      residues.push_back(nval / dval);
    }
  }

  Complex acc = 0.0;
  for (std::size_t k = 0; k < poles.size(); ++k)
    acc += residues[k] * gaussian_pole_integral(poles[k], doppler.thermal_width);
  return acc;
}

SusceptibilitySpectrum spectrum(const GridSpec& grid,
                                const SchemeInstance& scheme,
                                const DopplerConfig& doppler) {
  if (grid.count < 2)
    throw std::invalid_argument("spectrum: grid needs at least 2 points");
  if (!(grid.min < grid.max))
    throw std::invalid_argument("spectrum: grid min must be below max");

  SusceptibilitySpectrum out;
  out.scheme = scheme;
  out.doppler = doppler;
  out.detunings.resize(grid.count);
  out.chi.resize(grid.count);
  const double step = (grid.max - grid.min) / (grid.count - 1);
  detail::parallel_for(static_cast<std::size_t>(grid.count), [&](std::size_t i) {
    const double d = grid.min + step * static_cast<double>(i);
    out.detunings[i] = d;
    out.chi[i] = doppler.enabled ? chi_doppler(d, scheme, doppler)
                                 : chi_at(d, scheme);
  });
  return out;
}

std::vector<Peak> find_peaks(const SusceptibilitySpectrum& spec,
                             double min_prominence) {
  const std::size_t n = spec.chi.size();
  if (n < 3 || spec.detunings.size() != n)
    throw std::invalid_argument("find_peaks: degenerate spectrum");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = spec.chi[i].imag();
    if (!std::isfinite(y[i]))
      throw std::invalid_argument("find_peaks: non-finite spectrum value");
  }
  const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
  const double range = *hi_it - *lo_it;
  if (min_prominence < 0.0) min_prominence = 0.005 * range;

  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;

    // prominence: drop to the lowest valley before a higher sample
    double left_min = y[i];
    for (std::size_t j = i; j-- > 0;) {
      left_min = std::min(left_min, y[j]);
      if (y[j] > y[i]) break;
    }
    double right_min = y[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      right_min = std::min(right_min, y[j]);
      if (y[j] > y[i]) break;
    }
    const double prominence = y[i] - std::max(left_min, right_min);
    if (prominence < min_prominence) continue;

    Peak p;
    const double dx = spec.detunings[i + 1] - spec.detunings[i];
    const double denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
    double offset = 0.0;
    if (denom < 0.0) offset = 0.5 * (y[i - 1] - y[i + 1]) / denom;
    offset = std::clamp(offset, -0.5, 0.5);
    p.position = spec.detunings[i] + offset * dx;
    p.height = y[i] - 0.25 * (y[i - 1] - y[i + 1]) * offset;

    // interpolated half-maximum crossings, walking out from the peak
    const double half = p.height / 2.0;
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = i; j-- > 0;) {
      if (y[j] <= half) {
        const double f = (half - y[j]) / (y[j + 1] - y[j]);
        lo = spec.detunings[j] + f * (spec.detunings[j + 1] - spec.detunings[j]);
        break;
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (y[j] <= half) {
        const double f = (y[j - 1] - half) / (y[j - 1] - y[j]);
        hi = spec.detunings[j - 1] + f * (spec.detunings[j] - spec.detunings[j - 1]);
        break;
      }
    }
    p.fwhm = hi - lo;  // NaN when a crossing is off-grid
    peaks.push_back(p);
  }
  return peaks;
}

Extremum eit_minimum(const SchemeInstance& scheme, double window_lo,
                     double window_hi) {
  if (!(window_lo < window_hi))
    throw std::invalid_argument("eit_minimum: empty search window");

  const auto f = [&](double x) { return chi_at(x, scheme).imag(); };

  const int scan = 2001;
  const double step = (window_hi - window_lo) / (scan - 1);
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < scan; ++i) {
    const double v = f(window_lo + i * step);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == scan - 1)
    throw NotFoundError("eit_minimum: no interior minimum in the window");

  double a = window_lo + (best - 1) * step;
  double b = window_lo + (best + 1) * step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-7) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace atsim
