#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "atsim/half_int.hpp"

namespace atsim {

/// Hyperfine manifold of one alkali D1-type line, all energies in units of
/// the natural linewidth gamma (gamma itself is the unit and is fixed to 1).
struct LevelConfig {
  HalfInt nuclear_spin = HalfInt::from_twice(7);  // Cs: I = 7/2
  HalfInt ground_f = 4;
  HalfInt excited_f_low = 3;
  HalfInt excited_f_high = 4;
  HalfInt j_ground = HalfInt::from_twice(1);
  HalfInt j_excited = HalfInt::from_twice(1);
  /// Excited hyperfine splitting in gamma units. Cs 6P_1/2 default:
  /// 1167.68 MHz splitting over the 4.575 MHz natural width.
  double hyperfine_splitting = 255.2;

  static LevelConfig cesium_d1() { return {}; }
};

/// Strong sigma+ control mode. Detuning is referenced to the lower excited
/// hyperfine transition |m'> -> |n>; the Rabi frequency is defined through
/// that same transition, Omega_c = 2|V_nm'|. rabi = 0 switches the control
/// off (used for baseline spectra).
struct ControlField {
  double detuning = 0.0;
  double rabi = 15.0;
};

enum class Model { full, lambda };

constexpr std::string_view to_string(Model m) {
  return m == Model::full ? "full" : "lambda";
}

/// The resolved four-state working scheme:
///   |m>  = (F, M=F)    populated ground sublevel
///   |m'> = (F, M=F-2)  empty ground sublevel driven by the control
///   |n>  = (F_low,  M=F-1) lower excited hyperfine sublevel
///   |n'> = (F_high, M=F-1) upper excited hyperfine sublevel
/// Energies are in the rotating frame with E_m = E_m' = E_n = 0 and
/// E_n' = hyperfine splitting; couplings carry the angular-algebra signs.
/// Instances are immutable values in normal use; the fields stay writable so
/// tests can probe frame shifts and rephasing.
struct SchemeInstance {
  LevelConfig level;
  ControlField control;
  Model model = Model::full;

  double energy_m = 0.0;
  double energy_m_prime = 0.0;
  double energy_n = 0.0;
  double energy_n_prime = 0.0;

  std::complex<double> coupling_n;        // V_n  = Omega_c / 2
  std::complex<double> coupling_n_prime;  // V_n' = V_n * angular ratio
  std::complex<double> probe_n;           // c_n  (sigma- from |m>)
  std::complex<double> probe_n_prime;     // c_n'

  [[nodiscard]] double strength_n() const { return std::norm(probe_n); }
  [[nodiscard]] double strength_n_prime() const {
    return std::norm(probe_n_prime);
  }
};

/// Derives all couplings from the configuration. Throws SchemeError when the
/// configuration cannot form the scheme (unreachable excited level, missing
/// sublevel, vanishing control transition, non-positive splitting for the
/// full model).
SchemeInstance build_scheme(const LevelConfig& level,
                            const ControlField& control, Model model);

enum class SchemeViolation {
  lambda_coupling,
  degenerate_excited_manifold,
  probe_strength_range,
  control_selection_rule,
  couplings_not_reproducible,
};

std::string_view to_string(SchemeViolation v);

/// Checks every SchemeInstance invariant; never throws. Empty result means
/// the instance is well formed.
std::vector<SchemeViolation> validate(const SchemeInstance& scheme);

}  // namespace atsim
