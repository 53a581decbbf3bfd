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

#include <optional>
#include <string>
#include <vector>

#include "singlerail/config.hpp"

namespace singlerail {

// Process exit codes shared by run() and the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInternalError = 3;

struct RunOptions {
  std::optional<std::string> output_dir;  // prefix for relative output paths
  bool dump_state = false;                // write the final state alongside
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> artifacts;   // files written, in order
  std::vector<std::string> violations;  // non-empty iff exit_code == 2
};

// Executes the configured experiment and writes its artifacts. Identical
// configs (same seed included) produce byte-identical files. Config
// problems return exit code 2 without touching the filesystem; internal
// failures propagate as exceptions for the caller to map to exit code 3.
RunResult run(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace singlerail
