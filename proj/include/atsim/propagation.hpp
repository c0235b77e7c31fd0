#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "atsim/susceptibility.hpp"

namespace atsim {

/// Homogeneous slab seen by the probe. The single dimensionless
/// cooperativity parameter n0 (lambda/2pi)^2 L fixes the accumulated phase
/// and absorption. atom_mass is carried for Doppler bookkeeping only (the
/// kinetic terms reduce to the frequency shifts in DopplerConfig).
struct MediumConfig {
  double cooperativity = 25.0;
  SchemeInstance scheme;
  DopplerConfig doppler;
  double atom_mass = 0.0;
};

/// Quasi-monochromatic probe envelope on a uniform time grid (1/gamma
/// units) with its carrier detuning (gamma units).
struct PulseProfile {
  std::vector<double> t;
  std::vector<std::complex<double>> envelope;
  double carrier_detuning = 0.0;

  [[nodiscard]] double dt() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }
  [[nodiscard]] double energy() const;
};

/// Gaussian envelope whose intensity FWHM is the given width, peaked at
/// window/4 so delayed output stays inside the window.
PulseProfile gaussian_pulse(double fwhm, double carrier_detuning,
                            double window, std::size_t samples = 1u << 14);

/// Throws std::invalid_argument on a non-uniform grid, vanishing energy, or
/// envelope edges above 1e-6 of the peak.
void validate_pulse(const PulseProfile& pulse);

/// Frequency response of the slab relative to vacuum:
///   H(Omega) = exp(2 pi i * cooperativity * chi(carrier + Omega)).
std::vector<std::complex<double>> transfer_function(
    std::span<const double> omega, const MediumConfig& medium,
    double carrier_detuning);

/// Exact frequency-domain solution of the linear 1D propagation through the
/// slab. Output is on the input grid; throws WindowTooSmallError when the
/// delayed pulse reaches the window edge (above 1e-4 of its peak).
PulseProfile propagate_pulse(const PulseProfile& pulse,
                             const MediumConfig& medium);

/// Same propagation against an arbitrary chi(delta_bar); the engine behind
/// propagate_pulse, also useful for analytic media in tests.
PulseProfile propagate_with_chi(
    const PulseProfile& pulse, double cooperativity,
    const std::function<std::complex<double>(double)>& chi);

struct PulseMetrics {
  double transmission = 0.0;    // output/input energy
  double centroid_delay = 0.0;  // 1/gamma
  double fwhm_in = 0.0;
  double fwhm_out = 0.0;
  double fractional_delay = 0.0;  // centroid_delay / fwhm_in
  /// T * min(1, centroid_delay / fwhm_in): full credit once the pulse is
  /// delayed by its own width. A declared convention, reported alongside the
  /// raw numbers.
  double proxy_efficiency = 0.0;
};

PulseMetrics pulse_metrics(const PulseProfile& input,
                           const PulseProfile& output);

/// One row of a (carrier, fwhm) operating-point sweep.
struct SweepPoint {
  double carrier = 0.0;
  double fwhm = 0.0;
  PulseMetrics metrics;
};

/// Propagates a Gaussian pulse for every (carrier, fwhm) pair, sizing the
/// time window automatically (rows whose window cannot be grown enough are
/// dropped). Rows come back in sweep order.
std::vector<SweepPoint> sweep_operating_points(
    const MediumConfig& medium, std::span<const double> carriers,
    std::span<const double> fwhms);

}  // namespace atsim
