#include "atsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
  std::size_t pos = 0;
  const double v = std::stod(text, &pos);
  if (pos != text.size())
    throw std::invalid_argument("malformed number: '" + text + "'");
  return v;
}

}  // namespace

HalfInt parse_half_int(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = trim(text.substr(0, slash));
    const std::string den = trim(text.substr(slash + 1));
    if (den != "2")
      throw std::invalid_argument("half-integer denominator must be 2: '" +
                                  text + "'");
    return HalfInt::from_twice(std::stoi(num));
  }
  return HalfInt::from_value(parse_double(text));
}

Model parse_model(const std::string& text) {
  if (text == "full") return Model::full;
  if (text == "lambda") return Model::lambda;
  throw std::invalid_argument("model must be 'full' or 'lambda', got '" +
                              text + "'");
}

ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base) {
  ScenarioConfig cfg = base;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty value for '" + key + "'");

    if (key == "nuclear_spin") {
      cfg.level.nuclear_spin = parse_half_int(value);
    } else if (key == "ground_F") {
      cfg.level.ground_f = parse_half_int(value);
    } else if (key == "excited_F_low") {
      cfg.level.excited_f_low = parse_half_int(value);
    } else if (key == "excited_F_high") {
      cfg.level.excited_f_high = parse_half_int(value);
    } else if (key == "hyperfine_splitting_gamma") {
      cfg.level.hyperfine_splitting = parse_double(value);
    } else if (key == "control_detuning_gamma") {
      cfg.control.detuning = parse_double(value);
    } else if (key == "rabi_gamma") {
      cfg.control.rabi = parse_double(value);
    } else if (key == "model") {
      cfg.model = parse_model(value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path,
                                 const ScenarioConfig& base) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open config file: " + path);
  return parse_config(in, base);
}

std::map<std::string, std::string> config_as_keys(const ScenarioConfig& cfg) {
  std::ostringstream split, det, rabi;
  split.precision(17);
  det.precision(17);
  rabi.precision(17);
  split << cfg.level.hyperfine_splitting;
  det << cfg.control.detuning;
  rabi << cfg.control.rabi;
  return {
      {"nuclear_spin", cfg.level.nuclear_spin.str()},
      {"ground_F", cfg.level.ground_f.str()},
      {"excited_F_low", cfg.level.excited_f_low.str()},
      {"excited_F_high", cfg.level.excited_f_high.str()},
      {"hyperfine_splitting_gamma", split.str()},
      {"control_detuning_gamma", det.str()},
      {"rabi_gamma", rabi.str()},
      {"model", std::string(to_string(cfg.model))},
  };
}

}  // namespace atsim
