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

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "singlerail/config.hpp"
#include "singlerail/runner.hpp"

namespace {

int run_command(const std::string& config_path,
                const singlerail::RunOptions& options) {
  singlerail::ExperimentConfig config;
  try {
    config = singlerail::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return singlerail::kExitConfigError;
  }

  try {
    singlerail::RunResult result = singlerail::run(config, options);
    for (const auto& violation : result.violations) {
      std::cerr << "config error: " << violation << "\n";
    }
    for (const auto& artifact : result.artifacts) {
      std::cout << "wrote " << artifact << "\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return singlerail::kExitInternalError;
  }
}

int validate_command(const std::string& config_path) {
  singlerail::ExperimentConfig config;
  try {
    config = singlerail::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return singlerail::kExitConfigError;
  }
  auto violations = singlerail::validate(config);
  if (violations.empty()) {
    std::cout << "ok\n";
    return singlerail::kExitOk;
  }
  for (const auto& violation : violations) {
    std::cout << violation << "\n";
  }
  return singlerail::kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singlerail: linear-optical simulation experiments"};
  app.require_subcommand(1);

  std::string config_path;
  singlerail::RunOptions options;
  std::string output_dir;

  CLI::App* run = app.add_subcommand("run", "execute an experiment config");
  run->add_option("config", config_path, "experiment config file")->required();
  CLI::Option* out_opt =
      run->add_option("--output", output_dir, "directory for output files");
  run->add_flag("--dump-state", options.dump_state,
                "also write the final state (entangle experiment)");

  CLI::App* validate =
      app.add_subcommand("validate", "check a config without running it");
  std::string validate_path;
  validate->add_option("config", validate_path, "experiment config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : singlerail::kExitConfigError;
  }

  if (run->parsed()) {
    if (out_opt->count() > 0) options.output_dir = output_dir;
    return run_command(config_path, options);
  }
  return validate_command(validate_path);
}
