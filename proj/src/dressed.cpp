#include "atsim/dressed.hpp"

#include <cmath>

#include "atsim/errors.hpp"

namespace atsim {

namespace {

using Complex = std::complex<double>;
constexpr Complex kHalfWidth{0.0, 0.5};  // i*gamma/2 with gamma = 1

struct LevelData {
  double energy;    // unperturbed excited energy
  Complex coupling; // control matrix element V
};

LevelData pick(ExcitedLevel which, const SchemeInstance& s) {
  if (which == ExcitedLevel::n) return {s.energy_n, s.coupling_n};
  return {s.energy_n_prime, s.coupling_n_prime};
}

ExcitedLevel partner_of(ExcitedLevel which) {
  return which == ExcitedLevel::n ? ExcitedLevel::n_prime : ExcitedLevel::n;
}

// control frequency in the frame of the scheme energies
double control_frequency(const SchemeInstance& s, double velocity_shift) {
  return s.control.detuning + (s.energy_n - s.energy_m_prime) - velocity_shift;
}

}  // namespace

QuasiEnergyPair quasi_energies(ExcitedLevel level, const SchemeInstance& scheme,
                               double velocity_shift) {
  const LevelData lvl = pick(level, scheme);
  const double omega = control_frequency(scheme, velocity_shift);
  const double omega_lm = lvl.energy - scheme.energy_m_prime;

  Complex plus, minus;
  if (lvl.coupling == 0.0) {
    // decoupled: the exact pair, bypassing the mean +- root subtraction
    // whose rounding would otherwise smear the two-photon point
    plus = scheme.energy_m_prime + omega;
    minus = scheme.energy_m_prime + omega_lm - kHalfWidth;
  } else {
    const Complex mean = scheme.energy_m_prime +
                         0.5 * (omega + omega_lm) - 0.5 * kHalfWidth;
    const Complex inner = omega_lm - omega - kHalfWidth;
    const Complex root =
        std::sqrt(std::norm(lvl.coupling) + 0.25 * inner * inner);
    plus = mean + root;
    minus = mean - root;
  }
  if (plus.real() < minus.real() ||
      (plus.real() == minus.real() && plus.imag() < minus.imag()))
    std::swap(plus, minus);
  return {plus, minus};
}

std::complex<double> self_energy(ExcitedLevel level, std::complex<double> energy,
                                 const SchemeInstance& scheme,
                                 double velocity_shift) {
  const LevelData lvl = pick(level, scheme);
  if (lvl.coupling == 0.0) return 0.0;

  const LevelData partner = pick(partner_of(level), scheme);
  const QuasiEnergyPair qe =
      quasi_energies(partner_of(level), scheme, velocity_shift);
  const Complex den = (energy - qe.e_plus) * (energy - qe.e_minus);
  if (den == 0.0)
    throw PoleEvaluationError("self_energy evaluated at a quasi-energy pole");
  return std::norm(lvl.coupling) * (energy - partner.energy + kHalfWidth) /
         den;
}

GreenMatrix green_matrix(std::complex<double> energy,
                         const SchemeInstance& scheme, double velocity_shift) {
  const LevelData n = pick(ExcitedLevel::n, scheme);
  const LevelData np = pick(ExcitedLevel::n_prime, scheme);
  const Complex bare_n = energy - n.energy + kHalfWidth;
  const Complex bare_np = energy - np.energy + kHalfWidth;
  const double v2_n = std::norm(n.coupling);
  const double v2_np = std::norm(np.coupling);

  GreenMatrix g;
  Complex p_n = 0.0, p_np = 0.0;

  if (v2_n == 0.0) {
    // decoupled level: bare retarded propagator, no spurious 0/0 from the
    // collapsed quasi-energy factor
    if (bare_n == 0.0)
      throw PoleEvaluationError("green_matrix evaluated at the bare n pole");
    g.nn = 1.0 / bare_n;
  } else {
    const QuasiEnergyPair qnp =
        quasi_energies(ExcitedLevel::n_prime, scheme, velocity_shift);
    // quasi-energy-factored denominator; G_nn^-1 is kept multiplied through
    // so the dark-state point (where the self-energy alone diverges but G
    // has a zero) stays finite
    const Complex den_np = (energy - qnp.e_plus) * (energy - qnp.e_minus);
    p_n = bare_n * den_np - v2_n * bare_np;
    if (p_n == 0.0)
      throw PoleEvaluationError("green_matrix evaluated at a dressed pole");
    g.nn = den_np / p_n;
  }

  if (v2_np == 0.0) {
    if (bare_np == 0.0)
      throw PoleEvaluationError("green_matrix evaluated at the bare n' pole");
    g.npnp = 1.0 / bare_np;
  } else {
    const QuasiEnergyPair qn =
        quasi_energies(ExcitedLevel::n, scheme, velocity_shift);
    const Complex den_n = (energy - qn.e_plus) * (energy - qn.e_minus);
    p_np = bare_np * den_n - v2_np * bare_n;
    if (p_np == 0.0)
      throw PoleEvaluationError("green_matrix evaluated at a dressed pole");
    g.npnp = den_n / p_np;
  }

  if (v2_n != 0.0 && v2_np != 0.0) {
    g.npn = np.coupling * std::conj(n.coupling) / p_n;
    g.nnp = n.coupling * std::conj(np.coupling) / p_np;
  }
  return g;
}

}  // namespace atsim
