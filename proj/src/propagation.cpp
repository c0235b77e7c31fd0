#include "atsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atsim/errors.hpp"
#include "fft.hpp"
#include "parallel.hpp"

namespace atsim {

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// intensity FWHM by interpolated half-maximum crossings around the main lobe
double intensity_fwhm(const std::vector<double>& t,
                      const std::vector<Complex>& env) {
  std::vector<double> p(env.size());
  for (std::size_t i = 0; i < env.size(); ++i) p[i] = std::norm(env[i]);
  const std::size_t imax =
      static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  const double half = p[imax] / 2.0;
  double lo = t.front(), hi = t.back();
  for (std::size_t j = imax; j-- > 0;) {
    if (p[j] <= half) {
      const double f = (half - p[j]) / (p[j + 1] - p[j]);
      lo = t[j] + f * (t[j + 1] - t[j]);
      break;
    }
  }
  for (std::size_t j = imax + 1; j < p.size(); ++j) {
    if (p[j] <= half) {
      const double f = (p[j - 1] - half) / (p[j - 1] - p[j]);
      hi = t[j - 1] + f * (t[j] - t[j - 1]);
      break;
    }
  }
  return hi - lo;
}

double centroid(const std::vector<double>& t, const std::vector<Complex>& env) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    const double p = std::norm(env[i]);
    num += t[i] * p;
    den += p;
  }
  return num / den;
}

}  // namespace

double PulseProfile::energy() const {
  double e = 0.0;
  for (const auto& v : envelope) e += std::norm(v);
  return e * dt();
}

PulseProfile gaussian_pulse(double fwhm, double carrier_detuning,
                            double window, std::size_t samples) {
  if (fwhm <= 0.0) throw std::invalid_argument("gaussian_pulse: fwhm <= 0");
  if (window <= 0.0 || samples < 16)
    throw std::invalid_argument("gaussian_pulse: bad window");
  PulseProfile p;
  p.carrier_detuning = carrier_detuning;
  p.t.resize(samples);
  p.envelope.resize(samples);
  const double dt = window / static_cast<double>(samples);
  const double t0 = window / 4.0;
  for (std::size_t i = 0; i < samples; ++i) {
    p.t[i] = dt * static_cast<double>(i);
    const double u = (p.t[i] - t0) / fwhm;
    p.envelope[i] = std::exp(-2.0 * std::log(2.0) * u * u);
  }
  return p;
}

void validate_pulse(const PulseProfile& pulse) {
  const std::size_t n = pulse.envelope.size();
  if (n < 16 || pulse.t.size() != n)
    throw std::invalid_argument("pulse: too few samples");
  const double dt = pulse.dt();
  if (dt <= 0.0) throw std::invalid_argument("pulse: non-increasing grid");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::fabs(pulse.t[i] - pulse.t[0] - dt * static_cast<double>(i)) >
        1e-9 * dt * static_cast<double>(n))
      throw std::invalid_argument("pulse: non-uniform time grid");
  }
  double peak = 0.0;
  for (const auto& v : pulse.envelope) peak = std::max(peak, std::abs(v));
  if (peak <= 0.0) throw std::invalid_argument("pulse: zero envelope");
  if (std::abs(pulse.envelope.front()) > 1e-6 * peak ||
      std::abs(pulse.envelope.back()) > 1e-6 * peak)
    throw std::invalid_argument("pulse: envelope does not decay at the window edges");
}

std::vector<Complex> transfer_function(std::span<const double> omega,
                                       const MediumConfig& medium,
                                       double carrier_detuning) {
  std::vector<Complex> h(omega.size());
  detail::parallel_for(omega.size(), [&](std::size_t i) {
    const double d = carrier_detuning + omega[i];
    const Complex chi = medium.doppler.enabled
                            ? chi_doppler(d, medium.scheme, medium.doppler)
                            : chi_at(d, medium.scheme);
    h[i] = std::exp(Complex(0.0, kTwoPi * medium.cooperativity) * chi);
  });
  return h;
}

PulseProfile propagate_with_chi(
    const PulseProfile& pulse, double cooperativity,
    const std::function<Complex(double)>& chi) {
  validate_pulse(pulse);
  const std::size_t n = pulse.envelope.size();
  const double dt = pulse.dt();

  // spectrum with the e^{+i Omega t} kernel: bin k holds Omega_k = 2 pi k /
  // (N dt), k folded to the signed range
  std::vector<Complex> work = pulse.envelope;
  detail::fft(work, +1);
  const double domega = kTwoPi / (dt * static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double idx = k <= n / 2 ? static_cast<double>(k)
                                  : static_cast<double>(k) - static_cast<double>(n);
    const Complex h =
        std::exp(Complex(0.0, kTwoPi * cooperativity) * chi(
                     pulse.carrier_detuning + idx * domega));
    work[k] *= h;
  }
  detail::fft(work, -1);

  PulseProfile out;
  out.t = pulse.t;
  out.carrier_detuning = pulse.carrier_detuning;
  out.envelope.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.envelope[k] = work[k] / static_cast<double>(n);

  double peak = 0.0;
  for (const auto& v : out.envelope) peak = std::max(peak, std::abs(v));
  if (peak > 0.0 && (std::abs(out.envelope.front()) > 1e-4 * peak ||
                     std::abs(out.envelope.back()) > 1e-4 * peak))
    throw WindowTooSmallError(
        "propagated pulse reaches the window edge; enlarge the time window");
  return out;
}

PulseProfile propagate_pulse(const PulseProfile& pulse,
                             const MediumConfig& medium) {
  const auto chi = [&medium](double delta_bar) {
    return medium.doppler.enabled
               ? chi_doppler(delta_bar, medium.scheme, medium.doppler)
               : chi_at(delta_bar, medium.scheme);
  };
  return propagate_with_chi(pulse, medium.cooperativity, chi);
}

PulseMetrics pulse_metrics(const PulseProfile& input,
                           const PulseProfile& output) {
  if (input.t.size() != output.t.size() ||
      input.envelope.size() != output.envelope.size())
    throw std::invalid_argument("pulse_metrics: mismatched grids");
  const double ein = input.energy();
  if (ein <= 0.0)
    throw std::invalid_argument("pulse_metrics: zero-energy input");

  PulseMetrics m;
  m.transmission = output.energy() / ein;
  m.centroid_delay =
      centroid(output.t, output.envelope) - centroid(input.t, input.envelope);
  m.fwhm_in = intensity_fwhm(input.t, input.envelope);
  m.fwhm_out = intensity_fwhm(output.t, output.envelope);
  m.fractional_delay = m.centroid_delay / m.fwhm_in;
  m.proxy_efficiency = m.transmission * std::min(1.0, m.fractional_delay);
  return m;
}

std::vector<SweepPoint> sweep_operating_points(const MediumConfig& medium,
                                               std::span<const double> carriers,
                                               std::span<const double> fwhms) {
  std::vector<SweepPoint> rows;
  for (const double fwhm : fwhms) {
    for (const double carrier : carriers) {
      double window = 16.0 * fwhm + 400.0;
      for (int attempt = 0; attempt < 4; ++attempt) {
        try {
          PulseProfile in = gaussian_pulse(fwhm, carrier, window);
          PulseProfile out = propagate_pulse(in, medium);
          rows.push_back({carrier, fwhm, pulse_metrics(in, out)});
          break;
        } catch (const WindowTooSmallError&) {
          window *= 2.0;  // retry; drop the row if it keeps hitting the edge
        }
      }
    }
  }
  return rows;
}

}  // namespace atsim
