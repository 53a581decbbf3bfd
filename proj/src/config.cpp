// Copyright 2026 The singlerail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "singlerail/config.hpp"

#include "singlerail/fock.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace singlerail {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double value = std::stod(token, &used);
  if (used != token.size()) {
    throw std::invalid_argument("trailing characters after number '" + token +
                                "'");
  }
  return value;
}

std::vector<double> parse_phase_list(const std::string& value) {
  std::string v = trim(value);
  if (v.rfind("linspace(", 0) == 0 && v.back() == ')') {
    std::string inner = v.substr(std::strlen("linspace("),
                                 v.size() - std::strlen("linspace(") - 1);
    auto args = split(inner, ',');
    if (args.size() != 3) {
      throw std::invalid_argument("linspace takes (start, stop, count)");
    }
    double start = parse_angle(trim(args[0]));
    double stop = parse_angle(trim(args[1]));
    long long count = std::stoll(trim(args[2]));
    if (count < 2) {
      throw std::invalid_argument("linspace count must be at least 2");
    }
    std::vector<double> values(count);
    for (long long i = 0; i < count; ++i) {
      values[i] = start + (stop - start) * static_cast<double>(i) /
                              static_cast<double>(count - 1);
    }
    return values;
  }
  std::vector<double> values;
  for (const auto& part : split(v, ',')) {
    values.push_back(parse_angle(trim(part)));
  }
  return values;
}

bool parse_bool(const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("expected true or false, got '" + value + "'");
}

}  // namespace

std::string experiment_name(Experiment experiment) {
  switch (experiment) {
    case Experiment::kEntangle:
      return "entangle";
    case Experiment::kTeleport:
      return "teleport";
    case Experiment::kTeleportEntangled:
      return "teleport-entangled";
    case Experiment::kBellScan:
      return "bell-scan";
    case Experiment::kMzSingle:
      return "mz-single";
  }
  return "unknown";
}

double parse_angle(const std::string& token) {
  if (token.rfind("deg:", 0) == 0) {
    return parse_double(token.substr(4)) * std::numbers::pi / 180.0;
  }
  return parse_double(token);
}

std::vector<std::pair<double, double>> PhasesSpec::settings() const {
  std::vector<std::pair<double, double>> out;
  if (mode == ScanMode::kZip) {
    for (std::size_t i = 0; i < phi_a.size(); ++i) {
      out.emplace_back(phi_a[i], phi_b[i]);
    }
  } else {
    for (double a : phi_a) {
      for (double b : phi_b) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::string ExperimentConfig::resolved_output_path() const {
  if (!output_path.empty()) return output_path;
  std::string stem =
      experiment ? experiment_name(*experiment) : std::string("experiment");
  return stem + (output_format == OutputFormat::kCsv ? ".csv" : ".json");
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": empty key");
    }
    if (!entries.emplace(key, value).second) {
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": duplicate key '" + key + "'");
    }
  }

  ExperimentConfig config;
  QubitSpec qubit;
  bool has_qubit = false;
  BeamSplitterSpec bs;
  bool has_bs = false;
  PhasesSpec phases;
  bool has_phases = false;

  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    std::string value = it->second;
    entries.erase(it);
    return value;
  };
  auto issue = [&](const std::string& message) {
    config.issues.push_back(message);
  };
  auto take_double = [&](const char* key, double& target, bool& present) {
    if (auto value = take(key)) {
      present = true;
      try {
        target = parse_double(*value);
      } catch (const std::exception& e) {
        issue(std::string(key) + ": " + e.what());
      }
    }
  };

  if (auto value = take("experiment")) {
    if (*value == "entangle") {
      config.experiment = Experiment::kEntangle;
    } else if (*value == "teleport") {
      config.experiment = Experiment::kTeleport;
    } else if (*value == "teleport-entangled") {
      config.experiment = Experiment::kTeleportEntangled;
    } else if (*value == "bell-scan") {
      config.experiment = Experiment::kBellScan;
    } else if (*value == "mz-single") {
      config.experiment = Experiment::kMzSingle;
    } else {
      issue("experiment: unknown value '" + *value + "'");
    }
  }

  if (auto value = take("seed")) {
    try {
      config.seed = static_cast<std::uint64_t>(std::stoull(*value));
    } catch (const std::exception&) {
      issue("seed: not a 64-bit unsigned integer");
    }
  }
  if (auto value = take("trials")) {
    try {
      config.trials = std::stoll(*value);
    } catch (const std::exception&) {
      issue("trials: not an integer");
    }
  }

  take_double("qubit.a_re", qubit.a_re, has_qubit);
  take_double("qubit.a_im", qubit.a_im, has_qubit);
  take_double("qubit.b_re", qubit.b_re, has_qubit);
  take_double("qubit.b_im", qubit.b_im, has_qubit);
  if (auto value = take("qubit.normalize")) {
    has_qubit = true;
    try {
      qubit.normalize = parse_bool(*value);
    } catch (const std::exception& e) {
      issue(std::string("qubit.normalize: ") + e.what());
    }
  }
  if (has_qubit) config.qubit = qubit;

  take_double("bs.t_re", bs.t_re, has_bs);
  take_double("bs.t_im", bs.t_im, has_bs);
  take_double("bs.r_re", bs.r_re, has_bs);
  take_double("bs.r_im", bs.r_im, has_bs);
  if (auto value = take("bs.normalize")) {
    has_bs = true;
    try {
      bs.normalize = parse_bool(*value);
    } catch (const std::exception& e) {
      issue(std::string("bs.normalize: ") + e.what());
    }
  }
  if (has_bs) config.bs = bs;

  if (auto value = take("phases.phi_a")) {
    has_phases = true;
    try {
      phases.phi_a = parse_phase_list(*value);
    } catch (const std::exception& e) {
      issue(std::string("phases.phi_a: ") + e.what());
    }
  }
  if (auto value = take("phases.phi_b")) {
    has_phases = true;
    try {
      phases.phi_b = parse_phase_list(*value);
    } catch (const std::exception& e) {
      issue(std::string("phases.phi_b: ") + e.what());
    }
  }
  if (auto value = take("phases.mode")) {
    has_phases = true;
    if (*value == "zip") {
      phases.mode = ScanMode::kZip;
    } else if (*value == "grid") {
      phases.mode = ScanMode::kGrid;
    } else {
      issue("phases.mode: expected zip or grid");
    }
  }
  if (has_phases) config.phases = phases;

  if (auto value = take("output.path")) config.output_path = *value;
  if (auto value = take("output.format")) {
    if (*value == "csv") {
      config.output_format = OutputFormat::kCsv;
    } else if (*value == "json") {
      config.output_format = OutputFormat::kJson;
    } else {
      issue("output.format: expected csv or json");
    }
  }

  for (const auto& [key, value] : entries) {
    issue("unknown key '" + key + "'");
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::vector<std::string> validate(const ExperimentConfig& config) {
  std::vector<std::string> violations = config.issues;

  if (!config.experiment) {
    violations.push_back("experiment: required");
    return violations;
  }
  if (!config.seed) {
    violations.push_back(
        "seed: required (runs must be explicitly seeded for reproducibility)");
  }
  if (config.trials < 1) {
    violations.push_back("trials: must be at least 1");
  }

  const Experiment experiment = *config.experiment;
  if (experiment == Experiment::kTeleport) {
    if (!config.qubit) {
      violations.push_back("qubit: block required for experiment=teleport");
    } else if (!config.qubit->normalize) {
      double total = config.qubit->a_re * config.qubit->a_re +
                     config.qubit->a_im * config.qubit->a_im +
                     config.qubit->b_re * config.qubit->b_re +
                     config.qubit->b_im * config.qubit->b_im;
      if (std::abs(total - 1.0) > 1e-9) {
        violations.push_back(
            "qubit: |a|^2 + |b|^2 must be 1 (set qubit.normalize = true to "
            "rescale)");
      }
    }
  }
  if (experiment == Experiment::kTeleportEntangled) {
    if (!config.bs) {
      violations.push_back(
          "bs: block required for experiment=teleport-entangled");
    } else if (!config.bs->normalize) {
      double total = config.bs->t_re * config.bs->t_re +
                     config.bs->t_im * config.bs->t_im +
                     config.bs->r_re * config.bs->r_re +
                     config.bs->r_im * config.bs->r_im;
      if (std::abs(total - 1.0) > kNormTolerance) {
        violations.push_back(
            "bs: |t|^2 + |r|^2 must be 1 (set bs.normalize = true to "
            "rescale)");
      }
    }
  }
  if (experiment == Experiment::kBellScan ||
      experiment == Experiment::kMzSingle) {
    if (!config.phases) {
      violations.push_back("phases: block required for experiment=" +
                           experiment_name(experiment));
    } else {
      if (config.phases->phi_a.empty()) {
        violations.push_back("phases.phi_a: required");
      }
      if (config.phases->phi_b.empty()) {
        violations.push_back("phases.phi_b: required");
      }
      if (config.phases->mode == ScanMode::kZip &&
          config.phases->phi_a.size() != config.phases->phi_b.size()) {
        violations.push_back(
            "phases: zip mode needs phi_a and phi_b of equal length");
      }
    }
  }
  return violations;
}

}  // namespace singlerail
