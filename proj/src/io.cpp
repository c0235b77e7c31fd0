#include "atsim/io.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "atsim/version.hpp"

namespace atsim {

namespace {

using nlohmann::json;

json config_json(const ScenarioConfig& cfg) {
  json j;
  for (const auto& [k, v] : config_as_keys(cfg)) j[k] = v;
  return j;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json metrics_json(const PulseMetrics& m) {
  return json{{"transmission", m.transmission},
              {"centroid_delay_gamma", m.centroid_delay},
              {"fwhm_in_gamma", m.fwhm_in},
              {"fwhm_out_gamma", m.fwhm_out},
              {"fractional_delay", m.fractional_delay},
              {"proxy_efficiency", m.proxy_efficiency}};
}

void append_metadata(std::ostringstream& out, const SusceptibilitySpectrum& s) {
  ScenarioConfig cfg{s.scheme.level, s.scheme.control, s.scheme.model};
  for (const auto& [k, v] : config_as_keys(cfg))
    out << "# " << k << " = " << v << "\n";
  if (s.doppler.enabled) {
    out << "# doppler_thermal_width_gamma = "
        << format_full(s.doppler.thermal_width) << "\n";
    out << "# doppler_quadrature_order = " << s.doppler.quadrature_order
        << "\n";
    out << "# doppler_copropagating = "
        << (s.doppler.copropagating ? "true" : "false") << "\n";
  } else {
    out << "# doppler = off\n";
  }
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string render_spectrum_csv(const SusceptibilitySpectrum& spec,
                                const SusceptibilitySpectrum* paired_lambda) {
  std::ostringstream out;
  out << "# chi-spectrum\n";
  out << "# atsim_version = " << kVersion << "\n";
  append_metadata(out, spec);
  if (paired_lambda == nullptr) {
    out << "delta_bar_gamma,chi_re,chi_im\n";
    for (std::size_t i = 0; i < spec.detunings.size(); ++i) {
      out << format_full(spec.detunings[i]) << ','
          << format_full(spec.chi[i].real()) << ','
          << format_full(spec.chi[i].imag()) << '\n';
    }
  } else {
    out << "delta_bar_gamma,chi_re_full,chi_im_full,chi_re_lambda,chi_im_lambda\n";
    for (std::size_t i = 0; i < spec.detunings.size(); ++i) {
      out << format_full(spec.detunings[i]) << ','
          << format_full(spec.chi[i].real()) << ','
          << format_full(spec.chi[i].imag()) << ','
          << format_full(paired_lambda->chi[i].real()) << ','
          << format_full(paired_lambda->chi[i].imag()) << '\n';
    }
  }
  return out.str();
}

std::string render_pulse_csv(const PulseProfile& input,
                             const PulseProfile& output) {
  std::ostringstream out;
  out << "# pulse-trace\n";
  out << "# atsim_version = " << kVersion << "\n";
  out << "# carrier_detuning_gamma = " << format_full(input.carrier_detuning)
      << "\n";
  out << "t_gamma,abs_in,abs_out,re_out,im_out\n";
  for (std::size_t i = 0; i < input.t.size(); ++i) {
    out << format_full(input.t[i]) << ','
        << format_full(std::abs(input.envelope[i])) << ','
        << format_full(std::abs(output.envelope[i])) << ','
        << format_full(output.envelope[i].real()) << ','
        << format_full(output.envelope[i].imag()) << '\n';
  }
  return out.str();
}

std::string render_metrics_json(const PulseMetrics& metrics,
                                const MediumConfig& medium,
                                const ScenarioConfig& config, double carrier,
                                double fwhm) {
  json j;
  j["metrics"] = metrics_json(metrics);
  j["carrier_detuning_gamma"] = carrier;
  j["pulse_fwhm_gamma"] = fwhm;
  j["cooperativity"] = medium.cooperativity;
  j["config"] = config_json(config);
  j["doppler_enabled"] = medium.doppler.enabled;
  j["atsim_version"] = kVersion;
  return j.dump(2) + "\n";
}

std::string render_sweep_csv(const std::vector<SweepPoint>& rows) {
  std::ostringstream out;
  out << "# carrier-sweep\n";
  out << "# atsim_version = " << kVersion << "\n";
  out << "carrier_gamma,fwhm_gamma,transmission,centroid_delay_gamma,"
         "fractional_delay,proxy_efficiency\n";
  for (const auto& r : rows) {
    out << format_full(r.carrier) << ',' << format_full(r.fwhm) << ','
        << format_full(r.metrics.transmission) << ','
        << format_full(r.metrics.centroid_delay) << ','
        << format_full(r.metrics.fractional_delay) << ','
        << format_full(r.metrics.proxy_efficiency) << '\n';
  }
  return out.str();
}

std::string render_manifest_json(const ScenarioConfig& config,
                                 const std::string& command,
                                 const std::vector<std::string>& outputs,
                                 std::optional<double> cooperativity,
                                 const DopplerConfig* doppler) {
  json j;
  j["artifact"] = "atsim";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config_json(config);
  if (cooperativity) j["cooperativity"] = *cooperativity;
  if (doppler != nullptr && doppler->enabled) {
    j["doppler"] = {{"thermal_width_gamma", doppler->thermal_width},
                    {"quadrature_order", doppler->quadrature_order},
                    {"copropagating", doppler->copropagating}};
  }
  j["config_digest"] = fnv1a_hex(j["config"].dump());
  j["timestamp"] = timestamp_utc();
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace atsim
