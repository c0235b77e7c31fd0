// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "atsim/angular.hpp"
#include "atsim/dressed.hpp"
#include "atsim/propagation.hpp"
#include "atsim/quadrature.hpp"
#include "atsim/scheme.hpp"
#include "atsim/susceptibility.hpp"
#include "fft.hpp"
#include "oracles/angular_oracle.hpp"
#include "oracles/dressed_oracle.hpp"
#include "oracles/roots_oracle.hpp"

using namespace atsim;
using Complex = std::complex<double>;

namespace {

SchemeInstance cs(double delta, double rabi, Model model = Model::full) {
  return build_scheme(LevelConfig::cesium_d1(), {delta, rabi}, model);
}

struct Harness {
  int failures = 0;
  void run(int id, const char* name,
           const std::function<std::pair<bool, std::string>()>& body) {
    std::pair<bool, std::string> result{false, "exception"};
    try {
      result = body();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d %s: %s\n", result.first ? "PASS" : "FAIL", id, name,
                result.second.c_str());
    std::fflush(stdout);
    if (!result.first) ++failures;
  }
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------- criteria

std::pair<bool, std::string> at_splitting() {
  const auto spec = spectrum({-30.0, 30.0, 12001}, cs(0.0, 15.0));
  const auto peaks = find_peaks(spec);
  if (peaks.size() != 2)
    return {false, fmt("expected 2 peaks, found %zu", peaks.size())};
  const double sep = peaks[1].position - peaks[0].position;
  const bool ok = std::fabs(sep - 15.0) <= 0.05 * 15.0;
  return {ok, fmt("peaks %.3f, %.3f; separation %.4f vs Omega_c 15 (5%%)",
                  peaks[0].position, peaks[1].position, sep)};
}

std::pair<bool, std::string> eit_imperfection() {
  const auto lam = eit_minimum(cs(0.0, 15.0, Model::lambda), -3.0, 3.0);
  const auto full = eit_minimum(cs(0.0, 15.0), -3.0, 3.0);
  const bool lam_ok = std::fabs(lam.position) <= 1e-4 &&
                      std::fabs(lam.value) <= 1e-10;
  const double shift = -full.position;
  const bool full_ok =
      full.position < 0.0 && shift > 0.05 && shift < 5.0 && full.value > 0.0;
  return {lam_ok && full_ok,
          fmt("lambda min (%.2e at %.2e); full min %.3e at %.4f (red shift "
              "in (0.05, 5))",
              lam.value, lam.position, full.value, full.position)};
}

std::pair<bool, std::string> triplet_structure() {
  std::string detail;
  bool ok = true;
  for (const double delta : {-50.0, 50.0}) {
    const auto spec = spectrum({-80.0, 320.0, 80001}, cs(delta, 15.0));
    const auto peaks = find_peaks(spec, 1e-3);
    bool near = false;
    for (const auto& p : peaks)
      if (std::fabs(p.position - delta) <= 3.0) near = true;
    ok = ok && peaks.size() >= 3 && near;
    detail += fmt("D=%+.0f: %zu peaks, near-control %s; ", delta,
                  peaks.size(), near ? "yes" : "no");
  }
  return {ok, detail};
}

double peak_height_near(const SusceptibilitySpectrum& spec, double where,
                        double radius) {
  const auto peaks = find_peaks(spec, 1e-4);
  double best = -1.0;
  for (const auto& p : peaks)
    if (std::fabs(p.position - where) <= radius) best = std::max(best, p.height);
  return best;
}

std::pair<bool, std::string> hyperfine_asymmetry() {
  std::string detail;
  bool ok = true;
  for (const double delta : {-50.0, 50.0}) {
    const GridSpec grid{delta - 5.0, delta + 5.0, 40001};
    const double full = peak_height_near(spectrum(grid, cs(delta, 15.0)),
                                         delta, 3.0);
    const double lam =
        peak_height_near(spectrum(grid, cs(delta, 15.0, Model::lambda)),
                         delta, 3.0);
    const bool this_ok = delta < 0 ? full < lam : full > lam;
    ok = ok && this_ok && full > 0 && lam > 0;
    detail += fmt("D=%+.0f: full %.4f %s lambda %.4f; ", delta, full,
                  delta < 0 ? "<" : ">", lam);
  }
  return {ok, detail};
}

std::pair<bool, std::string> lambda_constancy() {
  std::vector<double> heights, widths;
  for (const double delta : {-25.0, -50.0, -100.0}) {
    // the dressed resonance sits near Delta + V^2/Delta
    const double guess = delta + 56.25 / delta;
    const auto spec = spectrum({guess - 1.5, guess + 1.5, 60001},
                               cs(delta, 15.0, Model::lambda));
    const auto peaks = find_peaks(spec);
    if (peaks.size() != 1)
      return {false, fmt("expected 1 peak near %.2f, got %zu", guess,
                         peaks.size())};
    heights.push_back(peaks[0].height);
    widths.push_back(peaks[0].fwhm);
  }
  const double spread =
      *std::max_element(heights.begin(), heights.end()) /
          *std::min_element(heights.begin(), heights.end()) -
      1.0;
  const bool widths_decrease = widths[0] > widths[1] && widths[1] > widths[2];
  return {spread <= 0.05 && widths_decrease,
          fmt("heights %.4f/%.4f/%.4f (spread %.2f%%), widths "
              "%.4f/%.4f/%.4f decreasing %s",
              heights[0], heights[1], heights[2], 100.0 * spread, widths[0],
              widths[1], widths[2], widths_decrease ? "yes" : "no")};
}

std::pair<bool, std::string> pulse_operating_point() {
  MediumConfig medium;
  medium.cooperativity = 25.0;
  medium.scheme = cs(50.0, 15.0);

  const auto near = spectrum({44.0, 56.0, 48001}, medium.scheme);
  const auto peaks = find_peaks(near);
  if (peaks.empty()) return {false, "no dressed resonance found near +50"};
  const double res = peaks.front().position;

  std::vector<double> carriers;
  for (int i = 0; i <= 40; ++i) carriers.push_back(res - 3.0 + 6.0 * i / 40.0);
  const std::vector<double> fwhms{2, 3, 5, 8, 12, 20, 30, 50, 80};
  const auto rows = sweep_operating_points(medium, carriers, fwhms);

  const SweepPoint* best = nullptr;
  int feasible = 0;
  for (const auto& r : rows) {
    const bool ok = r.metrics.transmission >= 0.83 &&
                    r.metrics.transmission <= 0.97 &&
                    r.metrics.fractional_delay >= 0.4;
    if (!ok) continue;
    ++feasible;
    if (best == nullptr ||
        r.metrics.proxy_efficiency > best->metrics.proxy_efficiency)
      best = &r;
  }
  if (best == nullptr)
    return {false, fmt("no sweep row with T in [0.83, 0.97] and fractional "
                       "delay >= 0.4 (%zu rows)",
                       rows.size())};
  return {true,
          fmt("%d feasible rows; best carrier %.3f fwhm %.0f: T=%.3f "
              "delay=%.2f/gamma fractional=%.2f",
              feasible, best->carrier, best->fwhm, best->metrics.transmission,
              best->metrics.centroid_delay, best->metrics.fractional_delay)};
}

std::pair<bool, std::string> lambda_closed_form() {
  std::mt19937 rng{0x600d};
  std::uniform_real_distribution<double> ddist(-60.0, 60.0);
  std::uniform_real_distribution<double> rdist(0.5, 30.0);
  double worst = 0.0;
  int n = 0;
  while (n < 10000) {
    const double delta = ddist(rng), rabi = rdist(rng), db = ddist(rng);
    const double v2 = rabi * rabi / 4.0;
    // skip the ~0.2%-measure neighbourhoods of the two poles, where the
    // cancellation error of double precision itself (eps times the term
    // magnitude, here up to ~4e3) exceeds the 1e-12 target for any
    // evaluation route
    const Complex q = Complex(db - delta, 0.0) * Complex(db, 0.5) - v2;
    if (std::abs(q) < 8.0) continue;
    const auto s = cs(delta, rabi, Model::lambda);
    const Complex closed =
        -0.75 * std::norm(s.probe_n) /
        (Complex(db, 0.5) - Complex(v2, 0.0) / (db - delta));
    const Complex lib = chi_at(db, s);
    worst = std::max(worst, std::abs(lib - closed) / std::abs(closed));
    ++n;
  }
  return {worst <= 1e-12, fmt("worst relative deviation %.2e over 10^4 "
                              "samples (tol 1e-12)",
                              worst)};
}

std::pair<bool, std::string> green_function_algebra() {
  std::mt19937 rng{0xf00d};
  std::uniform_real_distribution<double> ddist(-10.0, 10.0);
  std::uniform_real_distribution<double> rdist(1.0, 12.0);
  std::uniform_real_distribution<double> split(20.0, 60.0);
  std::uniform_real_distribution<double> re(-15.0, 15.0);
  std::uniform_real_distribution<double> im(0.5, 3.0);

  double worst_g = 0.0, worst_root = 0.0;
  bool all_retarded = true;
  for (int n = 0; n < 10000; ++n) {
    auto lv = LevelConfig::cesium_d1();
    lv.hyperfine_splitting = split(rng);
    const auto s = build_scheme(lv, {ddist(rng), rdist(rng)}, Model::full);
    const auto cubic = oracle::dressed_cubic(s);
    const Complex e(re(rng), im(rng));

    const Complex factored = green_matrix(e, s).nn;
    const Complex expanded = oracle::g_nn_expanded(e, cubic);
    worst_g = std::max(worst_g,
                       std::abs(factored - expanded) / std::abs(expanded));

    const auto roots = oracle::companion_roots({cubic.c0, cubic.c1, cubic.c2});
    for (const auto& r : roots) {
      if (!(r.imag() < 0.0)) all_retarded = false;
      // polish the root on the factored form; agreement closes the loop
      const auto qnp = quasi_energies(ExcitedLevel::n_prime, s);
      Complex x = r;
      for (int it = 0; it < 8; ++it) {
        const Complex p = (x - s.energy_n + Complex(0, 0.5)) *
                              ((x - qnp.e_plus) * (x - qnp.e_minus)) -
                          std::norm(s.coupling_n) *
                              (x - s.energy_n_prime + Complex(0, 0.5));
        const Complex dp = (3.0 * x + 2.0 * cubic.c2) * x + cubic.c1;
        if (dp == 0.0) break;
        x -= p / dp;
      }
      worst_root = std::max(worst_root, std::abs(x - r));
    }
  }
  const bool ok = worst_g <= 1e-12 && worst_root <= 1e-9 && all_retarded;
  return {ok, fmt("factored vs expanded %.2e (tol 1e-12); root agreement "
                  "%.2e (tol 1e-9); all poles lower half: %s",
                  worst_g, worst_root, all_retarded ? "yes" : "no")};
}

std::pair<bool, std::string> angular_oracle_equivalence() {
  double worst3 = 0.0;
  long count3 = 0;
  for (int t1 = 0; t1 <= 10; ++t1) {
    for (int t2 = 0; t2 <= 10; ++t2) {
      for (int t3 = std::abs(t1 - t2); t3 <= std::min(10, t1 + t2); ++t3) {
        if ((t1 + t2 + t3) % 2 != 0) continue;
        for (int m1 = -t1; m1 <= t1; m1 += 2) {
          for (int m2 = -t2; m2 <= t2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > t3) continue;
            const auto h = HalfInt::from_twice;
            const double lib =
                wigner3j(h(t1), h(t2), h(t3), h(m1), h(m2), h(m3));
            const double ora =
                oracle::wigner3j(h(t1), h(t2), h(t3), h(m1), h(m2), h(m3));
            worst3 = std::max(worst3, std::fabs(lib - ora));
            ++count3;
          }
        }
      }
    }
  }

  double worst6 = 0.0;
  long count6 = 0;
  for (int t1 = 0; t1 <= 10; ++t1)
    for (int t2 = 0; t2 <= 10; ++t2)
      for (int t3 = 0; t3 <= 10; ++t3) {
        if (!triangle(HalfInt::from_twice(t1), HalfInt::from_twice(t2),
                      HalfInt::from_twice(t3)))
          continue;
        for (int t4 = 0; t4 <= 10; ++t4)
          for (int t5 = 0; t5 <= 10; ++t5) {
            if (!triangle(HalfInt::from_twice(t4), HalfInt::from_twice(t5),
                          HalfInt::from_twice(t3)))
              continue;
            for (int t6 = 0; t6 <= 10; ++t6) {
              const auto h = HalfInt::from_twice;
              if (!triangle(h(t1), h(t5), h(t6)) ||
                  !triangle(h(t4), h(t2), h(t6)))
                continue;
              const double lib = wigner6j(h(t1), h(t2), h(t3), h(t4), h(t5),
                                          h(t6));
              const double ora = oracle::wigner6j(h(t1), h(t2), h(t3), h(t4),
                                                  h(t5), h(t6));
              worst6 = std::max(worst6, std::fabs(lib - ora));
              ++count6;
            }
          }
      }

  // completeness over the full Cs D1 manifold
  const HalfInt I = HalfInt::from_twice(7), J = HalfInt::from_twice(1);
  double worst_sum = 0.0;
  for (const int tfe : {6, 8}) {
    for (int tme = -tfe; tme <= tfe; tme += 2) {
      double total = 0.0;
      for (const int tfg : {6, 8}) {
        for (int q = -1; q <= 1; ++q) {
          const int tmg = tme - 2 * q;
          if (std::abs(tmg) > tfg) continue;
          const double a =
              dipole_amplitude(HalfInt::from_twice(tfg),
                               HalfInt::from_twice(tmg),
                               HalfInt::from_twice(tfe),
                               HalfInt::from_twice(tme), q, I, J, J)
                  .value;
          total += a * a;
        }
      }
      worst_sum = std::max(worst_sum, std::fabs(total - 1.0));
    }
  }

  const bool ok = worst3 <= 1e-12 && worst6 <= 1e-12 && worst_sum <= 1e-12;
  return {ok, fmt("%ld 3j (worst %.2e), %ld 6j (worst %.2e), sum rule %.2e "
                  "(tol 1e-12)",
                  count3, worst3, count6, worst6, worst_sum)};
}

std::pair<bool, std::string> kramers_kronig() {
  // detuned-control configuration on a uniform grid over [-4096, 4096);
  // the Hilbert
  // transform comes from the band-limited FFT multiplier, compared on
  // |delta| <= 2000
  const auto s = cs(-50.0, 15.0);
  const std::size_t n = 1u << 21;
  const double half_span = 4096.0;
  const double dx = 2.0 * half_span / static_cast<double>(n);

  std::vector<Complex> work(n);
  std::vector<double> re_true(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -half_span + dx * static_cast<double>(j);
    const Complex chi = chi_at(x, s);
    work[j] = Complex(chi.imag(), 0.0);
    re_true[j] = chi.real();
  }
  atsim::detail::fft(work, -1);
  work[0] = 0.0;
  work[n / 2] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) work[k] *= Complex(0.0, 1.0);
  for (std::size_t k = n / 2 + 1; k < n; ++k) work[k] *= Complex(0.0, -1.0);
  atsim::detail::fft(work, +1);

  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -half_span + dx * static_cast<double>(j);
    if (std::fabs(x) > 2000.0) continue;
    const double rec = work[j].real() / static_cast<double>(n);
    num += (rec - re_true[j]) * (rec - re_true[j]);
    den += re_true[j] * re_true[j];
  }
  const double rel = std::sqrt(num / den);
  return {rel <= 0.02, fmt("relative L2 error %.4f%% (tol 2%%)", 100.0 * rel)};
}

std::pair<bool, std::string> doppler_limits() {
  const auto s = cs(0.0, 15.0);

  double worst_zero = 0.0;
  {
    DopplerConfig d;
    d.enabled = true;
    d.thermal_width = 0.0;
    d.quadrature_order = 64;
    for (const double db : {-7.5, -0.3, 0.0, 4.2, 250.0}) {
      const Complex cold = chi_at(db, s);
      worst_zero = std::max(
          worst_zero, std::abs(chi_doppler(db, s, d) - cold) / std::abs(cold));
    }
  }

  double worst_order = 0.0;
  {
    DopplerConfig a, b;
    a.enabled = b.enabled = true;
    a.quadrature_order = 64;
    b.quadrature_order = 128;
    for (const double width : {0.5, 2.0, 5.0}) {
      a.thermal_width = b.thermal_width = width;
      for (const double db : {-8.0, -0.4, 0.0, 3.7, 12.0}) {
        const Complex ca = chi_doppler(db, s, a);
        const Complex cb = chi_doppler(db, s, b);
        worst_order = std::max(worst_order, std::abs(ca - cb) / std::abs(cb));
      }
    }
  }

  // control off: Gauss-Hermite average vs a direct Lorentzian x Gaussian
  // convolution via Simpson on [-8 sigma, 8 sigma]
  const auto off = cs(0.0, 0.0);
  DopplerConfig d;
  d.enabled = true;
  d.quadrature_order = 128;
  double worst_voigt = 0.0;
  for (const double width : {0.5, 2.0, 5.0}) {
    d.thermal_width = width;
    for (const double db : {-3.0, 0.0, 1.0, 5.0, 254.0, 255.2}) {
      const int steps = 32000;  // even
      const double lo = -8.0 * width;
      const double h = 16.0 * width / steps;
      Complex acc = 0.0;
      for (int i = 0; i <= steps; ++i) {
        const double v = lo + h * i;
        const double gauss = std::exp(-0.5 * v * v / (width * width)) /
                             (width * std::sqrt(2.0 * M_PI));
        const Complex cold =
            -0.75 * (std::norm(off.probe_n) /
                         Complex(db - v - off.energy_n, 0.5) +
                     std::norm(off.probe_n_prime) /
                         Complex(db - v - off.energy_n_prime, 0.5));
        const double w = (i == 0 || i == steps) ? 1.0
                         : (i % 2 == 1)         ? 4.0
                                                : 2.0;
        acc += w * gauss * cold;
      }
      acc *= h / 3.0;
      const Complex lib = chi_doppler(db, off, d);
      worst_voigt = std::max(worst_voigt, std::abs(lib - acc) / std::abs(acc));
    }
  }

  const bool ok = worst_zero <= 1e-14 && worst_order <= 1e-8 &&
                  worst_voigt <= 1e-6;
  return {ok, fmt("zero-width %.2e (tol 1e-14); order 64 vs 128 %.2e (tol "
                  "1e-8); convolution oracle %.2e (tol 1e-6)",
                  worst_zero, worst_order, worst_voigt)};
}

std::pair<bool, std::string> propagation_sanity() {
  // vacuum identity
  const auto in = gaussian_pulse(6.0, 0.0, 480.0);
  const auto vac =
      propagate_with_chi(in, 0.0, [](double) { return Complex(0.0); });
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < in.envelope.size(); ++i) {
    num += std::norm(vac.envelope[i] - in.envelope[i]);
    den += std::norm(in.envelope[i]);
  }
  const double vac_err = std::sqrt(num / den);

  // linearity
  MediumConfig medium;
  medium.cooperativity = 25.0;
  medium.scheme = cs(50.0, 15.0);
  auto p1 = gaussian_pulse(5.0, 51.0, 480.0);
  auto p2 = gaussian_pulse(9.0, 51.0, 480.0);
  PulseProfile mix = p1;
  const Complex a(0.6, -0.3), b(-0.2, 0.9);
  for (std::size_t i = 0; i < mix.envelope.size(); ++i)
    mix.envelope[i] = a * p1.envelope[i] + b * p2.envelope[i];
  const auto o1 = propagate_pulse(p1, medium);
  const auto o2 = propagate_pulse(p2, medium);
  const auto omix = propagate_pulse(mix, medium);
  num = den = 0.0;
  for (std::size_t i = 0; i < mix.envelope.size(); ++i) {
    const Complex combo = a * o1.envelope[i] + b * o2.envelope[i];
    num += std::norm(omix.envelope[i] - combo);
    den += std::norm(combo);
  }
  const double lin_err = std::sqrt(num / den);

  // passivity
  double worst_t = 0.0;
  for (const double carrier : {47.0, 49.0, 50.5, 51.3, 55.0}) {
    const auto pin = gaussian_pulse(10.0, carrier, 800.0);
    const auto pout = propagate_pulse(pin, medium);
    worst_t = std::max(worst_t, pulse_metrics(pin, pout).transmission);
  }

  // narrowband group delay vs the dispersion derivative
  const double carrier = 47.0;
  const auto nb = gaussian_pulse(60.0, carrier, 4800.0, 1u << 15);
  const auto nb_out = propagate_pulse(nb, medium);
  const double delay = pulse_metrics(nb, nb_out).centroid_delay;
  const double h = 1e-5;
  const double dre = (chi_at(carrier + h, medium.scheme).real() -
                      chi_at(carrier - h, medium.scheme).real()) /
                     (2.0 * h);
  const double analytic = 2.0 * M_PI * medium.cooperativity * dre;
  const double gd_err = std::fabs(delay - analytic) / std::fabs(analytic);

  const bool ok = vac_err <= 1e-10 && lin_err <= 1e-10 &&
                  worst_t <= 1.0 + 1e-9 && gd_err <= 0.05;
  return {ok, fmt("vacuum %.1e (tol 1e-10); linearity %.1e (tol 1e-10); max "
                  "T-1 %.1e (tol 1e-9); group delay err %.2f%% (tol 5%%)",
                  vac_err, lin_err, worst_t - 1.0, 100.0 * gd_err)};
}

}  // namespace

int main() {
  Harness h;
  std::printf("atsim acceptance suite\n");
  h.run(1, "AT splitting (resonant control doublet)", at_splitting);
  h.run(2, "EIT minimum shift and imperfection", eit_imperfection);
  h.run(3, "Triplet structure at detuned control", triplet_structure);
  h.run(4, "Hyperfine asymmetry of the dressed resonance", hyperfine_asymmetry);
  h.run(5, "Lambda-model constant peak height", lambda_constancy);
  h.run(6, "Pulse delay operating point", pulse_operating_point);
  h.run(7, "Lambda closed-form oracle", lambda_closed_form);
  h.run(8, "Green-function algebra", green_function_algebra);
  h.run(9, "Angular oracle equivalence", angular_oracle_equivalence);
  h.run(10, "Kramers-Kronig consistency", kramers_kronig);
  h.run(11, "Doppler limits", doppler_limits);
  h.run(12, "Propagation sanity", propagation_sanity);
  if (h.failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", h.failures);
  return h.failures;
}
