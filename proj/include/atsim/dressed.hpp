#pragma once

#include <complex>

#include "atsim/scheme.hpp"

namespace atsim {

enum class ExcitedLevel { n, n_prime };

/// The two quasi-energy branches of one excited hyperfine level dressed by
/// the control field through |m'>, labelled so that Re(e_plus) >= Re(e_minus)
/// (ties broken by Im). Units of gamma; retarded poles sit in the lower half
/// plane for physical inputs.
struct QuasiEnergyPair {
  std::complex<double> e_plus;
  std::complex<double> e_minus;
};

/// Quasi-energies of the chosen level. velocity_shift is the control-beam
/// Doppler shift k.v in gamma units (0 for cold atoms); it enters as a shift
/// of the control frequency.
QuasiEnergyPair quasi_energies(ExcitedLevel level, const SchemeInstance& scheme,
                               double velocity_shift = 0.0);

/// Dressing correction to the named level from the control-coupled ground
/// sublevel |m'>, itself dressed by the partner excited level. Reduces to
/// |V|^2/(E - omega) when the partner coupling vanishes. Throws
/// PoleEvaluationError exactly at a quasi-energy pole.
std::complex<double> self_energy(ExcitedLevel level, std::complex<double> energy,
                                 const SchemeInstance& scheme,
                                 double velocity_shift = 0.0);

/// Retarded 2x2 Green matrix of the dressed excited doublet, indexed by
/// (n, n'); entries in 1/gamma units.
struct GreenMatrix {
  std::complex<double> nn;    // G_{n n}
  std::complex<double> nnp;   // G_{n n'}
  std::complex<double> npn;   // G_{n' n}
  std::complex<double> npnp;  // G_{n' n'}
};

/// All four entries, computed through the factored quasi-energy form. The
/// level-n diagonal subtracts a self-energy whose denominator carries the
/// partner (n') quasi-energies; cross entries share the same denominators.
GreenMatrix green_matrix(std::complex<double> energy,
                         const SchemeInstance& scheme,
                         double velocity_shift = 0.0);

}  // namespace atsim
