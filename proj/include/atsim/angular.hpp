#pragma once

#include <string_view>

#include "atsim/half_int.hpp"

namespace atsim {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).
///
/// Evaluated from the Racah single-sum formula with exact integer/rational
/// intermediates, converted to floating point at the end, so there is no
/// cancellation error for any argument this library meets (j <= 10 is well
/// inside the exact range). Triangle and projection violations give an exact
/// zero; a magnitude/projection pair of mismatched parity (e.g. j=1, m=1/2)
/// throws std::invalid_argument.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, same exact evaluation scheme.
/// Triangle-rule violations give zero; a triad with half-odd-integer
/// perimeter throws std::invalid_argument.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6);

/// Dimensionless hyperfine dipole matrix element.
///
/// Normalized so that for every excited sublevel (Fe, Me) the squared
/// amplitudes to all lower sublevels and polarizations sum to one, i.e. every
/// excited sublevel decays at the single natural rate.
struct DipoleAmplitude {
  double value = 0.0;
};

/// <Fe Me|d_q|Fg Mg> for a (Jg -> Je) line with nuclear spin I.
///
/// Sign convention:
///   (-1)^(Fe-Me) * 3j(Fe 1 Fg; -Me q Mg) * <Fe||d||Fg>,
///   <Fe||d||Fg> = (-1)^(Je+I+Fg+1) sqrt((2Fe+1)(2Fg+1))
///                 * 6j{Je Fe I; Fg Jg 1} * sqrt(2Je+1).
/// Only rephasing-invariant products of these amplitudes are observable;
/// the convention is fixed here so instances are reproducible.
DipoleAmplitude dipole_amplitude(HalfInt f_ground, HalfInt m_ground,
                                 HalfInt f_excited, HalfInt m_excited, int q,
                                 HalfInt nuclear_spin, HalfInt j_ground,
                                 HalfInt j_excited);

/// Branching weight of the excited hyperfine level Fe into the ground level
/// Fg: sum of squared dipole amplitudes over Mg and q at fixed Me
/// (independent of the chosen Me). Sums to 1 over the allowed Fg.
double relative_line_strength(HalfInt f_ground, HalfInt f_excited,
                              HalfInt nuclear_spin, HalfInt j_ground,
                              HalfInt j_excited);

/// Reduced matrix element <Fe||d||Fg> in the convention above; exposed for
/// the coupling diagnostics table.
double reduced_dipole_f(HalfInt f_ground, HalfInt f_excited,
                        HalfInt nuclear_spin, HalfInt j_ground,
                        HalfInt j_excited);

/// Identifier for the sign convention, echoed in coupling tables.
constexpr std::string_view wigner_convention_id =
    "wigner-eckart:(-1)^(Fe-Me) 3j(Fe 1 Fg;-Me q Mg); "
    "reduced:(-1)^(Je+I+Fg+1) sqrt((2Fe+1)(2Fg+1)) 6j{Je Fe I;Fg Jg 1} "
    "sqrt(2Je+1)";

}  // namespace atsim
