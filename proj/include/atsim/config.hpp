#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "atsim/scheme.hpp"

namespace atsim {

/// Scenario configuration assembled from Cs defaults, an optional config
/// file, and CLI overrides (in increasing precedence).
struct ScenarioConfig {
  LevelConfig level;
  ControlField control;
  Model model = Model::full;
};

/// Parses the key = value configuration format ('#' starts a comment).
/// Recognized keys: nuclear_spin, ground_F, excited_F_low, excited_F_high,
/// hyperfine_splitting_gamma, control_detuning_gamma, rabi_gamma, model.
/// Half-integer values accept both "7/2" and "3.5". Unknown keys or
/// malformed values throw std::invalid_argument.
ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base = {});

ScenarioConfig parse_config_file(const std::string& path,
                                 const ScenarioConfig& base = {});

/// The same keys serialized back out, for manifests and file metadata.
std::map<std::string, std::string> config_as_keys(const ScenarioConfig& cfg);

HalfInt parse_half_int(const std::string& text);
Model parse_model(const std::string& text);

}  // namespace atsim
