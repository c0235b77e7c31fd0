// atsim command-line front end: spectrum / pulse / figures / couplings.
// Exit codes: 0 success, 2 usage error, 3 physics or configuration error.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atsim/angular.hpp"
#include "atsim/config.hpp"
#include "atsim/errors.hpp"
#include "atsim/io.hpp"
#include "atsim/propagation.hpp"
#include "atsim/scheme.hpp"
#include "atsim/susceptibility.hpp"
#include "atsim/version.hpp"

namespace fs = std::filesystem;
using namespace atsim;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.min, &g.max, &g.count,
                  &extra) != 3)
    throw UsageError("malformed grid '" + text + "', expected min:max:count");
  if (!(g.min < g.max)) throw UsageError("grid min must be below max");
  if (g.count < 2) throw UsageError("grid needs at least 2 points");
  return g;
}

std::pair<double, double> parse_range(const std::string& text,
                                      const char* what) {
  double lo = 0, hi = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf%c", &lo, &hi, &extra) != 2 ||
      !(lo < hi))
    throw UsageError(std::string("malformed ") + what + " '" + text +
                     "', expected min:max");
  return {lo, hi};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return v;
}

// shared scenario flags; precedence CLI > config file > Cs defaults
struct ScenarioFlags {
  std::string config_path;
  double delta = 0.0;
  double rabi = 15.0;
  double splitting = 255.2;
  std::string model = "full";
  CLI::Option* opt_delta = nullptr;
  CLI::Option* opt_rabi = nullptr;
  CLI::Option* opt_splitting = nullptr;
  CLI::Option* opt_model = nullptr;

  void attach(CLI::App* cmd, bool with_model, bool model_extended) {
    cmd->add_option("--config", config_path,
                    "configuration file (key = value lines)");
    opt_delta = cmd->add_option("--delta", delta,
                                "control detuning (gamma units)");
    opt_rabi = cmd->add_option("--rabi", rabi,
                               "control Rabi frequency (gamma units)");
    opt_splitting = cmd->add_option("--splitting", splitting,
                                    "excited hyperfine splitting (gamma)");
    if (with_model) {
      opt_model = cmd
                      ->add_option("--model", model,
                                   model_extended
                                       ? "full | lambda | both | off"
                                       : "full | lambda")
                      ->check(model_extended
                                  ? CLI::IsMember({"full", "lambda", "both",
                                                   "off"})
                                  : CLI::IsMember({"full", "lambda"}));
    }
  }

  [[nodiscard]] ScenarioConfig resolve() const {
    ScenarioConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path, cfg);
    if (opt_delta->count() > 0) cfg.control.detuning = delta;
    if (opt_rabi->count() > 0) cfg.control.rabi = rabi;
    if (opt_splitting->count() > 0) cfg.level.hyperfine_splitting = splitting;
    if (opt_model != nullptr && opt_model->count() > 0 && model != "both" &&
        model != "off")
      cfg.model = parse_model(model);
    return cfg;
  }
};

struct DopplerFlags {
  double width = 0.0;
  int order = 64;
  bool counterpropagating = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--doppler-width", width,
                    "rms Doppler width of k.v (gamma); 0 disables averaging");
    cmd->add_option("--doppler-order", order, "Gauss-Hermite order")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--counterpropagating", counterpropagating,
                  "control beam opposes the probe");
  }

  [[nodiscard]] DopplerConfig resolve() const {
    DopplerConfig d;
    d.enabled = width > 0.0;
    d.thermal_width = width;
    d.quadrature_order = order;
    d.copropagating = !counterpropagating;
    return d;
  }
};

SchemeInstance scheme_for(const ScenarioConfig& cfg, Model model,
                          bool control_off = false) {
  ControlField control = cfg.control;
  if (control_off) control.rabi = 0.0;
  return build_scheme(cfg.level, control, model);
}

std::string describe(const ScenarioConfig& cfg, const std::string& command) {
  std::ostringstream out;
  out << "atsim " << command;
  for (const auto& [k, v] : config_as_keys(cfg)) out << " " << k << "=" << v;
  return out.str();
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const ScenarioFlags& sf, const DopplerFlags& df,
                 const std::string& grid_text, const std::string& out_path) {
  const GridSpec grid = parse_grid(grid_text);
  const ScenarioConfig cfg = sf.resolve();
  const DopplerConfig doppler = df.resolve();
  const std::string& mode = sf.model;

  std::string csv;
  if (mode == "both") {
    const auto full = spectrum(grid, scheme_for(cfg, Model::full), doppler);
    const auto lam = spectrum(grid, scheme_for(cfg, Model::lambda), doppler);
    csv = render_spectrum_csv(full, &lam);
  } else if (mode == "off") {
    const auto off =
        spectrum(grid, scheme_for(cfg, Model::full, true), doppler);
    csv = render_spectrum_csv(off);
  } else {
    const auto spec = spectrum(grid, scheme_for(cfg, cfg.model), doppler);
    csv = render_spectrum_csv(spec);
  }
  write_file_atomic(out_path, csv);
  write_file_atomic(out_path + ".manifest.json",
                    render_manifest_json(cfg, describe(cfg, "spectrum"),
                                         {out_path}, std::nullopt, &doppler));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// ------------------------------------------------------------------- pulse

int run_pulse(const ScenarioFlags& sf, const DopplerFlags& df,
              double cooperativity, std::optional<double> carrier,
              std::optional<double> fwhm, const std::string& optimize_text,
              const std::string& out_prefix) {
  const ScenarioConfig cfg = sf.resolve();
  MediumConfig medium;
  medium.cooperativity = cooperativity;
  medium.scheme = scheme_for(cfg, cfg.model);
  medium.doppler = df.resolve();

  std::vector<std::string> outputs;
  double best_carrier = 0.0, best_fwhm = 0.0;

  if (!optimize_text.empty()) {
    const auto [lo, hi] = parse_range(optimize_text, "--optimize-carrier");
    const std::vector<double> carriers = linspace(lo, hi, 61);
    const std::vector<double> fwhms =
        fwhm ? std::vector<double>{*fwhm}
             : std::vector<double>{2, 3, 5, 8, 12, 20, 30, 50, 80};
    const auto rows = sweep_operating_points(medium, carriers, fwhms);
    if (rows.empty())
      throw WindowTooSmallError(
          "no sweep row propagated cleanly; enlarge the carrier range");
    const auto best = std::max_element(
        rows.begin(), rows.end(), [](const SweepPoint& a, const SweepPoint& b) {
          return a.metrics.proxy_efficiency < b.metrics.proxy_efficiency;
        });
    best_carrier = best->carrier;
    best_fwhm = best->fwhm;
    write_file_atomic(out_prefix + ".sweep.csv", render_sweep_csv(rows));
    outputs.push_back(out_prefix + ".sweep.csv");
  } else {
    if (!carrier)
      throw UsageError("either --carrier or --optimize-carrier is required");
    best_carrier = *carrier;
    best_fwhm = fwhm.value_or(10.0);
  }

  double window = 16.0 * best_fwhm + 400.0;
  PulseProfile in;
  PulseProfile out;
  for (int attempt = 0;; ++attempt) {
    in = gaussian_pulse(best_fwhm, best_carrier, window);
    try {
      out = propagate_pulse(in, medium);
      break;
    } catch (const WindowTooSmallError&) {
      if (attempt >= 3) throw;
      window *= 2.0;
    }
  }
  const PulseMetrics metrics = pulse_metrics(in, out);

  write_file_atomic(out_prefix + ".trace.csv", render_pulse_csv(in, out));
  outputs.push_back(out_prefix + ".trace.csv");
  write_file_atomic(
      out_prefix + ".metrics.json",
      render_metrics_json(metrics, medium, cfg, best_carrier, best_fwhm));
  outputs.push_back(out_prefix + ".metrics.json");
  write_file_atomic(
      out_prefix + ".manifest.json",
      render_manifest_json(cfg, describe(cfg, "pulse"), outputs,
                           medium.cooperativity, &medium.doppler));

  std::cout << "carrier " << format_full(best_carrier) << "  fwhm "
            << format_full(best_fwhm) << "  T "
            << format_full(metrics.transmission) << "  delay "
            << format_full(metrics.centroid_delay) << "  fractional "
            << format_full(metrics.fractional_delay) << "\n";
  return 0;
}

// ----------------------------------------------------------------- figures

// emitted reference data must satisfy the spectrum invariants
void check_invariants(const SusceptibilitySpectrum& spec) {
  for (std::size_t i = 0; i < spec.chi.size(); ++i) {
    if (spec.chi[i].imag() < -1e-12)
      throw PhysicsError("emitted spectrum violates passivity at " +
                         format_full(spec.detunings[i]));
    if (i > 0 && !(spec.detunings[i] > spec.detunings[i - 1]))
      throw PhysicsError("emitted spectrum grid is not increasing");
  }
}

void emit_figure_spectra(const fs::path& dir, const ScenarioConfig& cfg,
                         const GridSpec& overview, const GridSpec* vicinity) {
  const auto full = spectrum(overview, scheme_for(cfg, Model::full));
  const auto lam = spectrum(overview, scheme_for(cfg, Model::lambda));
  const auto off = spectrum(overview, scheme_for(cfg, Model::full, true));
  check_invariants(full);
  check_invariants(lam);
  check_invariants(off);
  write_file_atomic(dir / "spectrum_full_lambda.csv",
                    render_spectrum_csv(full, &lam));
  write_file_atomic(dir / "spectrum_off.csv", render_spectrum_csv(off));
  if (vicinity != nullptr) {
    const auto vf = spectrum(*vicinity, scheme_for(cfg, Model::full));
    const auto vl = spectrum(*vicinity, scheme_for(cfg, Model::lambda));
    check_invariants(vf);
    check_invariants(vl);
    write_file_atomic(dir / "vicinity_full_lambda.csv",
                      render_spectrum_csv(vf, &vl));
  }
}

void run_figure(int which, const fs::path& out_dir) {
  ScenarioConfig cfg;  // Cs defaults, Omega_c = 15
  const fs::path dir = out_dir / ("fig" + std::to_string(which));
  std::vector<std::string> outputs;

  if (which == 2) {
    cfg.control.detuning = 0.0;
    emit_figure_spectra(dir, cfg, {-30.0, 30.0, 6001}, nullptr);
    const GridSpec insert{-4.0, 4.0, 4001};
    const auto inf = spectrum(insert, scheme_for(cfg, Model::full));
    const auto inl = spectrum(insert, scheme_for(cfg, Model::lambda));
    write_file_atomic(dir / "insert_full_lambda.csv",
                      render_spectrum_csv(inf, &inl));
    const auto mn = eit_minimum(scheme_for(cfg, Model::full), -3.0, 3.0);
    const auto mnl = eit_minimum(scheme_for(cfg, Model::lambda), -3.0, 3.0);
    nlohmann::json j{{"full", {{"position_gamma", mn.position},
                               {"im_chi", mn.value}}},
                     {"lambda", {{"position_gamma", mnl.position},
                                 {"im_chi", mnl.value}}}};
    write_file_atomic(dir / "eit_minimum.json", j.dump(2) + "\n");
    outputs = {"spectrum_full_lambda.csv", "spectrum_off.csv",
               "insert_full_lambda.csv", "eit_minimum.json"};
  } else if (which == 3 || which == 4) {
    cfg.control.detuning = which == 3 ? -50.0 : 50.0;
    const GridSpec vicinity{cfg.control.detuning - 7.0,
                            cfg.control.detuning + 7.0, 28001};
    emit_figure_spectra(dir, cfg, {-80.0, 320.0, 80001}, &vicinity);
    outputs = {"spectrum_full_lambda.csv", "spectrum_off.csv",
               "vicinity_full_lambda.csv"};
  } else if (which == 5) {
    cfg.control.detuning = 50.0;
    MediumConfig medium;
    medium.cooperativity = 25.0;
    medium.scheme = scheme_for(cfg, Model::full);

    // locate the resonance near the control frequency, then sweep around it
    const auto near = spectrum({cfg.control.detuning - 6.0,
                                cfg.control.detuning + 6.0, 48001},
                               medium.scheme);
    const auto peaks = find_peaks(near);
    if (peaks.empty()) throw NotFoundError("no resonance near the control");
    const double res = peaks.front().position;
    write_file_atomic(dir / "resonance_region.csv", render_spectrum_csv(near));

    const auto rows = sweep_operating_points(
        medium, linspace(res - 3.0, res + 3.0, 41),
        std::vector<double>{2, 3, 5, 8, 12, 20, 30, 50, 80});
    write_file_atomic(dir / "sweep.csv", render_sweep_csv(rows));
    const auto best = std::max_element(
        rows.begin(), rows.end(), [](const SweepPoint& a, const SweepPoint& b) {
          return a.metrics.proxy_efficiency < b.metrics.proxy_efficiency;
        });
    double window = 16.0 * best->fwhm + 400.0;
    PulseProfile in = gaussian_pulse(best->fwhm, best->carrier, window);
    PulseProfile out = propagate_pulse(in, medium);
    write_file_atomic(dir / "best_pulse.trace.csv", render_pulse_csv(in, out));
    write_file_atomic(dir / "best_pulse.metrics.json",
                      render_metrics_json(pulse_metrics(in, out), medium, cfg,
                                          best->carrier, best->fwhm));
    outputs = {"resonance_region.csv", "sweep.csv", "best_pulse.trace.csv",
               "best_pulse.metrics.json"};
  } else {
    throw UsageError("unknown figure id " + std::to_string(which));
  }

  write_file_atomic(dir / "manifest.json",
                    render_manifest_json(
                        cfg, "atsim figures --which " + std::to_string(which),
                        outputs, which == 5 ? std::optional<double>(25.0)
                                            : std::nullopt));
  std::cout << "wrote " << (dir / "manifest.json").string() << "\n";
}

int run_figures(const std::string& which, const std::string& out_dir) {
  if (which == "all") {
    for (int f : {2, 3, 4, 5}) run_figure(f, out_dir);
    return 0;
  }
  if (which == "2" || which == "3" || which == "4" || which == "5") {
    run_figure(std::stoi(which), out_dir);
    return 0;
  }
  throw UsageError("--which must be one of 2, 3, 4, 5, all");
}

// --------------------------------------------------------------- couplings

int run_couplings(const ScenarioFlags& sf, const std::string& json_path) {
  const ScenarioConfig cfg = sf.resolve();
  const SchemeInstance s = scheme_for(cfg, cfg.model);
  const LevelConfig& lv = cfg.level;

  std::printf("working scheme (%s model)\n", to_string(cfg.model).data());
  std::printf("  |m>  = (F=%s, M=%s)   E = %s\n", lv.ground_f.str().c_str(),
              lv.ground_f.str().c_str(), format_full(s.energy_m).c_str());
  std::printf("  |m'> = (F=%s, M=%s)   E = %s\n", lv.ground_f.str().c_str(),
              (lv.ground_f - HalfInt(2)).str().c_str(),
              format_full(s.energy_m_prime).c_str());
  std::printf("  |n>  = (F'=%s, M'=%s)  E = %s\n",
              lv.excited_f_low.str().c_str(),
              (lv.ground_f - HalfInt(1)).str().c_str(),
              format_full(s.energy_n).c_str());
  std::printf("  |n'> = (F'=%s, M'=%s)  E = %s\n",
              lv.excited_f_high.str().c_str(),
              (lv.ground_f - HalfInt(1)).str().c_str(),
              format_full(s.energy_n_prime).c_str());
  std::printf("control couplings (gamma units)\n");
  std::printf("  V_n  = Omega_c/2 = %s\n",
              format_full(s.coupling_n.real()).c_str());
  std::printf("  V_n' = %s  (ratio %s)\n",
              format_full(s.coupling_n_prime.real()).c_str(),
              format_full(s.coupling_n == 0.0
                              ? 0.0
                              : (s.coupling_n_prime / s.coupling_n).real())
                  .c_str());
  std::printf("probe amplitudes (dimensionless)\n");
  std::printf("  c_n  = %s   |c_n|^2  = %s\n",
              format_full(s.probe_n.real()).c_str(),
              format_full(s.strength_n()).c_str());
  std::printf("  c_n' = %s   |c_n'|^2 = %s\n",
              format_full(s.probe_n_prime.real()).c_str(),
              format_full(s.strength_n_prime()).c_str());

  std::printf("hyperfine line strengths (rows Fe, columns Fg)\n");
  nlohmann::json lines = nlohmann::json::object();
  for (HalfInt fe : {lv.excited_f_low, lv.excited_f_high}) {
    double total = 0.0;
    std::printf("  F'=%s:", fe.str().c_str());
    for (int dg = -1; dg <= 1; ++dg) {
      const HalfInt fg = fe + HalfInt(dg);
      if (!triangle(lv.j_ground, lv.nuclear_spin, fg)) continue;
      const double st = relative_line_strength(fg, fe, lv.nuclear_spin,
                                               lv.j_ground, lv.j_excited);
      total += st;
      std::printf("  S(Fg=%s) = %.12f", fg.str().c_str(), st);
      lines["Fe=" + fe.str()]["Fg=" + fg.str()] = st;
    }
    std::printf("   [sum %.12f]\n", total);
  }
  std::printf("convention: %s\n", std::string(wigner_convention_id).c_str());

  if (!json_path.empty()) {
    nlohmann::json j;
    j["config"] = nlohmann::json::object();
    for (const auto& [k, v] : config_as_keys(cfg)) j["config"][k] = v;
    j["V_n"] = s.coupling_n.real();
    j["V_n_prime"] = s.coupling_n_prime.real();
    j["c_n"] = s.probe_n.real();
    j["c_n_prime"] = s.probe_n_prime.real();
    j["strength_n"] = s.strength_n();
    j["strength_n_prime"] = s.strength_n_prime();
    j["line_strengths"] = lines;
    j["wigner_convention"] = std::string(wigner_convention_id);
    j["atsim_version"] = kVersion;
    write_file_atomic(json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probe susceptibility and slow-light propagation for a "
               "control-dressed alkali D1 hyperfine doublet"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "susceptibility spectrum CSV");
  ScenarioFlags sp_sf;
  DopplerFlags sp_df;
  sp_sf.attach(sp, true, true);
  sp_df.attach(sp);
  std::string sp_grid = "-30:30:4001";
  std::string sp_out = "spectrum.csv";
  sp->add_option("--grid", sp_grid, "detuning grid min:max:count");
  sp->add_option("--out", sp_out, "output CSV path");

  // pulse
  auto* pu = app.add_subcommand("pulse", "propagate a Gaussian probe pulse");
  ScenarioFlags pu_sf;
  DopplerFlags pu_df;
  pu_sf.attach(pu, true, false);
  pu_df.attach(pu);
  double pu_coop = 25.0;
  std::optional<double> pu_carrier, pu_fwhm;
  std::string pu_opt, pu_out = "pulse";
  pu->add_option("--cooperativity", pu_coop,
                 "n0 (lambda/2pi)^2 L (0 = vacuum)")
      ->check(CLI::NonNegativeNumber);
  pu->add_option("--carrier", pu_carrier, "carrier detuning (gamma)");
  pu->add_option("--fwhm", pu_fwhm, "pulse intensity FWHM (1/gamma)");
  pu->add_option("--optimize-carrier", pu_opt,
                 "sweep carrier over min:max for best proxy efficiency");
  pu->add_option("--out", pu_out, "output file prefix");

  // figures
  auto* fg = app.add_subcommand("figures", "emit reference data bundles");
  std::string fg_which = "all";
  std::string fg_dir = "figures";
  fg->add_option("--which", fg_which, "2 | 3 | 4 | 5 | all");
  fg->add_option("--out-dir", fg_dir, "output directory");

  // couplings
  auto* cp = app.add_subcommand("couplings", "derived coupling table");
  ScenarioFlags cp_sf;
  cp_sf.attach(cp, true, false);
  std::string cp_json;
  cp->add_option("--json", cp_json, "also write a JSON record here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sp->parsed()) return run_spectrum(sp_sf, sp_df, sp_grid, sp_out);
    if (pu->parsed())
      return run_pulse(pu_sf, pu_df, pu_coop, pu_carrier, pu_fwhm, pu_opt,
                       pu_out);
    if (fg->parsed()) return run_figures(fg_which, fg_dir);
    if (cp->parsed()) return run_couplings(cp_sf, cp_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PhysicsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
