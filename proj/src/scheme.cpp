#include "atsim/scheme.hpp"

#include <cmath>
#include <string>

#include "atsim/angular.hpp"
#include "atsim/errors.hpp"

namespace atsim {

namespace {

double amp(const LevelConfig& lv, HalfInt mg, HalfInt fe, HalfInt me, int q) {
  return dipole_amplitude(lv.ground_f, mg, fe, me, q, lv.nuclear_spin,
                          lv.j_ground, lv.j_excited)
      .value;
}

}  // namespace

SchemeInstance build_scheme(const LevelConfig& level,
                            const ControlField& control, Model model) {
  if (control.rabi < 0.0)
    throw SchemeError("control Rabi frequency must be >= 0");
  if (level.excited_f_low >= level.excited_f_high)
    throw SchemeError("excited_f_low must lie below excited_f_high");
  if (!triangle(level.j_ground, level.nuclear_spin, level.ground_f))
    throw SchemeError("ground F=" + level.ground_f.str() +
                      " not in the (Jg, I) manifold");
  for (HalfInt fe : {level.excited_f_low, level.excited_f_high}) {
    if (!triangle(level.j_excited, level.nuclear_spin, fe))
      throw SchemeError("excited F=" + fe.str() +
                        " not in the (Je, I) manifold");
    if (!triangle(level.ground_f, 1, fe))
      throw SchemeError("ground F=" + level.ground_f.str() +
                        " cannot reach excited F=" + fe.str());
  }
  if (model == Model::full && level.hyperfine_splitting <= 0.0)
    throw SchemeError("full model requires a positive hyperfine splitting");

  const HalfInt m_pop = level.ground_f;              // M = F
  const HalfInt m_empty = m_pop - HalfInt(2);        // M = F - 2
  const HalfInt m_exc = m_pop - HalfInt(1);          // M' = F - 1
  if (!projection_in_range(level.ground_f, m_empty))
    throw SchemeError("ground manifold has no M = F-2 sublevel");
  if (!projection_in_range(level.excited_f_low, m_exc) ||
      !projection_in_range(level.excited_f_high, m_exc))
    throw SchemeError("excited manifold has no M = F-1 sublevel");

  const double ctrl_low = amp(level, m_empty, level.excited_f_low, m_exc, +1);
  const double ctrl_high = amp(level, m_empty, level.excited_f_high, m_exc, +1);
  if (ctrl_low == 0.0)
    throw SchemeError(
        "control transition |m'> -> |n> vanishes; Rabi frequency undefined");

  SchemeInstance s;
  s.level = level;
  s.control = control;
  s.model = model;
  s.energy_n_prime = level.hyperfine_splitting;

  s.coupling_n = control.rabi / 2.0;
  s.probe_n = amp(level, m_pop, level.excited_f_low, m_exc, -1);
  if (model == Model::full) {
    s.coupling_n_prime = s.coupling_n * (ctrl_high / ctrl_low);
    s.probe_n_prime = amp(level, m_pop, level.excited_f_high, m_exc, -1);
  }
  return s;
}

std::string_view to_string(SchemeViolation v) {
  switch (v) {
    case SchemeViolation::lambda_coupling:
      return "lambda-coupling-violation";
    case SchemeViolation::degenerate_excited_manifold:
      return "degenerate-excited-manifold";
    case SchemeViolation::probe_strength_range:
      return "probe-strength-out-of-range";
    case SchemeViolation::control_selection_rule:
      return "control-selection-rule-violation";
    case SchemeViolation::couplings_not_reproducible:
      return "couplings-not-reproducible";
  }
  return "unknown-violation";
}

std::vector<SchemeViolation> validate(const SchemeInstance& scheme) {
  std::vector<SchemeViolation> out;
  const double eps = 1e-12;

  if (scheme.model == Model::lambda &&
      (std::abs(scheme.coupling_n_prime) != 0.0 ||
       std::abs(scheme.probe_n_prime) != 0.0))
    out.push_back(SchemeViolation::lambda_coupling);

  if (scheme.model == Model::full &&
      scheme.energy_n_prime - scheme.energy_n <= 0.0)
    out.push_back(SchemeViolation::degenerate_excited_manifold);

  const double sn = scheme.strength_n();
  const double snp = scheme.strength_n_prime();
  bool strength_ok = sn > 0.0 && sn <= 1.0 + eps;
  if (scheme.model == Model::full)
    strength_ok = strength_ok && snp > 0.0 && snp <= 1.0 + eps;
  else
    strength_ok = strength_ok && snp <= eps;
  if (!strength_ok) out.push_back(SchemeViolation::probe_strength_range);

  // The sigma+ control must not reach the populated sublevel: no excited
  // state with M' = M_pop + 1 may carry a nonzero amplitude.
  {
    const LevelConfig& lv = scheme.level;
    const HalfInt m_up = lv.ground_f + HalfInt(1);
    bool couples = false;
    for (HalfInt fe : {lv.excited_f_low, lv.excited_f_high}) {
      if (!projection_in_range(fe, m_up)) continue;
      if (!triangle(lv.j_ground, lv.nuclear_spin, lv.ground_f) ||
          !triangle(lv.j_excited, lv.nuclear_spin, fe) ||
          !triangle(lv.ground_f, 1, fe))
        continue;
      if (amp(lv, lv.ground_f, fe, m_up, +1) != 0.0) couples = true;
    }
    if (couples) out.push_back(SchemeViolation::control_selection_rule);
  }

  // Derived couplings must be reproducible from (LevelConfig, ControlField).
  try {
    const SchemeInstance ref =
        build_scheme(scheme.level, scheme.control, scheme.model);
    const auto close = [eps](std::complex<double> a, std::complex<double> b) {
      return std::abs(a - b) <= eps * (1.0 + std::abs(b));
    };
    const bool same =
        close(scheme.coupling_n, ref.coupling_n) &&
        close(scheme.coupling_n_prime, ref.coupling_n_prime) &&
        close(scheme.probe_n, ref.probe_n) &&
        close(scheme.probe_n_prime, ref.probe_n_prime) &&
        std::abs((scheme.energy_n_prime - scheme.energy_n) -
                 (ref.energy_n_prime - ref.energy_n)) <= eps;
    if (!same) out.push_back(SchemeViolation::couplings_not_reproducible);
  } catch (const PhysicsError&) {
    out.push_back(SchemeViolation::couplings_not_reproducible);
  }

  return out;
}

}  // namespace atsim
