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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace singlerail {

enum class Experiment {
  kEntangle,
  kTeleport,
  kTeleportEntangled,
  kBellScan,
  kMzSingle,
};

enum class OutputFormat { kCsv, kJson };

std::string experiment_name(Experiment experiment);

struct QubitSpec {
  double a_re = 0.0;
  double a_im = 0.0;
  double b_re = 0.0;
  double b_im = 0.0;
  bool normalize = false;
};

struct BeamSplitterSpec {
  double t_re = 0.0;
  double t_im = 0.0;
  double r_re = 0.0;
  double r_im = 0.0;
  bool normalize = false;
};

enum class ScanMode { kZip, kGrid };

struct PhasesSpec {
  std::vector<double> phi_a;
  std::vector<double> phi_b;
  ScanMode mode = ScanMode::kZip;

  // The (phi_a, phi_b) settings in row order: pairwise for zip,
  // phi_a-major cross product for grid.
  std::vector<std::pair<double, double>> settings() const;
};

// One experiment definition, read from a flat key/value file. Keys use
// dotted prefixes for the typed blocks (qubit.*, bs.*, phases.*, output.*).
struct ExperimentConfig {
  std::optional<Experiment> experiment;
  std::optional<std::uint64_t> seed;
  long long trials = 1;
  std::optional<QubitSpec> qubit;
  std::optional<BeamSplitterSpec> bs;
  std::optional<PhasesSpec> phases;
  std::string output_path;  // defaulted from the experiment name when empty
  OutputFormat output_format = OutputFormat::kJson;

  // Problems found while reading the file (unknown keys, bad numbers).
  std::vector<std::string> issues;

  std::string resolved_output_path() const;
};

// Parses config text. Structural errors (lines without '=', duplicate
// keys) throw std::runtime_error; value-level problems are collected into
// `issues` for validate() to report.
ExperimentConfig parse_config_text(const std::string& text);

// Reads and parses a config file; throws std::runtime_error when the file
// cannot be read.
ExperimentConfig load_config(const std::string& path);

// Every reason run() would reject the config; empty means runnable.
std::vector<std::string> validate(const ExperimentConfig& config);

// Angle token: a radian float, or deg:<float> for degrees.
double parse_angle(const std::string& token);

}  // namespace singlerail
