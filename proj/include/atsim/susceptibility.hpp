#pragma once

#include <complex>
#include <vector>

#include "atsim/scheme.hpp"

namespace atsim {

/// Overall susceptibility scale: a closed two-level transition of unit
/// strength has resonant Im chi = 3/2 in units of n0 (lambda/2pi)^3, the
/// textbook resonant-cross-section anchor sigma0 = 3 lambda^2 / (2 pi).
constexpr double kChiScale = 0.75;

/// One-dimensional Doppler averaging along the propagation axis.
/// thermal_width is the rms of k.v in gamma units; copropagating selects the
/// control beam direction relative to the probe.
struct DopplerConfig {
  bool enabled = false;
  double thermal_width = 0.0;
  int quadrature_order = 64;
  bool copropagating = true;
};

/// Dimensionless probe susceptibility at detuning delta_bar (gamma units),
/// cold-atom limit.
std::complex<double> chi_at(double delta_bar, const SchemeInstance& scheme);

/// Thermal average of chi_at over the 1D velocity distribution, with the
/// control and probe shifts applied per the copropagating flag. The cold
/// response is rational in the Doppler shift, so the average is evaluated in
/// closed form through the complex probability function: converged at every
/// width and independent of quadrature_order (which is validated and kept
/// as metadata). Equals chi_at when thermal_width is zero.
std::complex<double> chi_doppler(double delta_bar, const SchemeInstance& scheme,
                                 const DopplerConfig& doppler);

struct GridSpec {
  double min = -30.0;
  double max = 30.0;
  int count = 4001;
};

struct SusceptibilitySpectrum {
  std::vector<double> detunings;  // strictly increasing, gamma units
  std::vector<std::complex<double>> chi;
  SchemeInstance scheme;  // metadata: configuration that produced the data
  DopplerConfig doppler;
};

/// Evaluates the susceptibility on a uniform grid. Deterministic; grid
/// points are independent and may be evaluated in parallel (ATSIM_THREADS).
SusceptibilitySpectrum spectrum(const GridSpec& grid,
                                const SchemeInstance& scheme,
                                const DopplerConfig& doppler = {});

struct Peak {
  double position = 0.0;
  double height = 0.0;
  double fwhm = 0.0;
};

/// Local maxima of Im chi with at least the given prominence (a negative
/// value selects the default, 0.5% of the spectrum range), refined by a
/// parabolic fit and sorted by position.
std::vector<Peak> find_peaks(const SusceptibilitySpectrum& spec,
                             double min_prominence = -1.0);

struct Extremum {
  double position = 0.0;
  double value = 0.0;
};

/// Minimum of Im chi inside [window_lo, window_hi] via a grid scan plus
/// golden-section refinement; the window must bracket an interior minimum.
Extremum eit_minimum(const SchemeInstance& scheme, double window_lo,
                     double window_hi);

}  // namespace atsim
