#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "atsim/config.hpp"
#include "atsim/propagation.hpp"
#include "atsim/susceptibility.hpp"

namespace atsim {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

/// Writes text to path atomically (temp file + rename).
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// Spectrum CSV: '# chi-spectrum' header, metadata comments, then
/// delta_bar_gamma,chi_re,chi_im rows. With a second spectrum the chi
/// columns are paired (..._full, ..._lambda) for direct comparison.
std::string render_spectrum_csv(
    const SusceptibilitySpectrum& spec,
    const SusceptibilitySpectrum* paired_lambda = nullptr);

/// Pulse trace CSV: t_gamma,abs_in,abs_out,re_out,im_out.
std::string render_pulse_csv(const PulseProfile& input,
                             const PulseProfile& output);

/// Metrics record with the full configuration echo (JSON).
std::string render_metrics_json(const PulseMetrics& metrics,
                                const MediumConfig& medium,
                                const ScenarioConfig& config, double carrier,
                                double fwhm);

/// Carrier/fwhm sweep table CSV.
std::string render_sweep_csv(const std::vector<SweepPoint>& rows);

/// Run manifest: resolved configuration, artifact version, digest of the
/// resolved configuration, timestamp, and the list of emitted files.
std::string render_manifest_json(const ScenarioConfig& config,
                                 const std::string& command,
                                 const std::vector<std::string>& outputs,
                                 std::optional<double> cooperativity = {},
                                 const DopplerConfig* doppler = nullptr);

/// FNV-1a digest of a string, hex encoded; used as the config digest.
std::string fnv1a_hex(const std::string& data);

}  // namespace atsim
