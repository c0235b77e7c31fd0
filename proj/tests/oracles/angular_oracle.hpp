#pragma once

// Independent angular-momentum oracles for the test suite. These avoid the
// library's Racah-sum implementation on purpose: Clebsch-Gordan coefficients
// come from the Van der Waerden sum with exact __int128 rationals, 6j values
// from the defining contraction of four 3j symbols, and hyperfine dipole
// amplitudes from a brute-force decomposition of |(J I) F M> into
// |J mJ>|I mI> products.

#include <complex>
#include <vector>

#include "atsim/half_int.hpp"

namespace atsim::oracle {

/// <j1 m1 j2 m2 | J M> via the Van der Waerden sum, exact rational
/// intermediates, float conversion at the end.
double cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3);

/// Defining contraction over all projections (memoized 3j oracle inside).
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6);

/// <Fe Me|d_q|Fg Mg> composed from CG products and electron-only dipole
/// elements with <Je||d||Jg> = sqrt(2Je+1).
double dipole_amplitude(HalfInt f_ground, HalfInt m_ground, HalfInt f_excited,
                        HalfInt m_excited, int q, HalfInt nuclear_spin,
                        HalfInt j_ground, HalfInt j_excited);

}  // namespace atsim::oracle
