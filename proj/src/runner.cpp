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

#include "singlerail/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "singlerail/protocols.hpp"
#include "singlerail/serialize.hpp"

namespace singlerail {

namespace {

namespace fs = std::filesystem;

// 17 significant digits round-trip doubles exactly, which keeps artifacts
// stable under regression hashing.
std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_bool(bool value) { return value ? "true" : "false"; }

class ArtifactWriter {
 public:
  ArtifactWriter(fs::path path, RunResult& result)
      : path_(std::move(path)), result_(result) {
    if (path_.has_parent_path()) {
      fs::create_directories(path_.parent_path());
    }
    out_.open(path_, std::ios::binary);
    if (!out_) {
      throw std::runtime_error("cannot write output file '" + path_.string() +
                               "'");
    }
  }

  ~ArtifactWriter() {
    if (out_.is_open()) {
      out_.close();
      result_.artifacts.push_back(path_.string());
    }
  }

  std::ofstream& stream() { return out_; }

 private:
  fs::path path_;
  RunResult& result_;
  std::ofstream out_;
};

// Streams {"records": [...], "summary": {...}} without holding every
// record in memory.
class JsonRecordWriter {
 public:
  explicit JsonRecordWriter(std::ofstream& out) : out_(out) {
    out_ << "{\n\"records\": [";
  }

  void add(const Json& record) {
    out_ << (first_ ? "\n" : ",\n") << record.dump();
    first_ = false;
  }

  void finish(const Json& summary) {
    out_ << "\n],\n\"summary\": " << summary.dump(1) << "\n}\n";
  }

 private:
  std::ofstream& out_;
  bool first_ = true;
};

void write_summary_sidecar(const fs::path& main_path, const Json& summary,
                           RunResult& result) {
  fs::path side = main_path;
  side.replace_extension(".summary.json");
  ArtifactWriter writer(side, result);
  writer.stream() << summary.dump(1) << "\n";
}

void write_state_sidecar(const fs::path& main_path, const PureState& state,
                         RunResult& result) {
  fs::path side = main_path;
  side.replace_extension(".state.json");
  ArtifactWriter writer(side, result);
  writer.stream() << state_to_json(state).dump(1) << "\n";
}

Json config_echo(const ExperimentConfig& config) {
  Json echo;
  echo["experiment"] = experiment_name(*config.experiment);
  echo["seed"] = *config.seed;
  echo["trials"] = config.trials;
  return echo;
}

QubitAmplitudes qubit_from_spec(const QubitSpec& spec) {
  Complex a{spec.a_re, spec.a_im};
  Complex b{spec.b_re, spec.b_im};
  return spec.normalize ? QubitAmplitudes::normalized(a, b)
                        : QubitAmplitudes(a, b);
}

BeamSplitterParams splitter_from_spec(const BeamSplitterSpec& spec) {
  Complex t{spec.t_re, spec.t_im};
  Complex r{spec.r_re, spec.r_im};
  if (spec.normalize) {
    double n = std::sqrt(std::norm(t) + std::norm(r));
    if (n == 0.0) {
      throw std::runtime_error("beam splitter amplitudes cannot both vanish");
    }
    t /= n;
    r /= n;
  }
  return BeamSplitterParams(t, r);
}

void run_entangle(const ExperimentConfig& config, const RunOptions& options,
                  const fs::path& path, RunResult& result) {
  const PureState state = generate_entangled();
  const std::vector<std::string> modes = {"A", "B"};
  const OutcomeDistribution exact = outcome_distribution(state, modes);

  RandomStream base(*config.seed);
  std::map<DetectionEvent, long long> histogram;
  std::vector<DetectionEvent> events;
  events.reserve(config.trials);
  for (long long i = 0; i < config.trials; ++i) {
    RandomStream trial_stream = base.substream(static_cast<std::uint64_t>(i));
    Sample shot = sample(state, modes, trial_stream);
    ++histogram[shot.event];
    events.push_back(std::move(shot.event));
  }

  ModeRegister pair_reg({"A", "B"}, kDefaultCutoff);
  PureState direct = superpose({{Complex{1.0, 0.0}, basis_state(pair_reg, {1, 0})},
                                {Complex{1.0, 0.0}, basis_state(pair_reg, {0, 1})}});

  Json summary = config_echo(config);
  Json exact_rows = Json::array();
  for (const auto& [event, p] : exact.entries()) {
    Json row;
    row["counts"] = event_to_json(event);
    row["probability"] = p;
    exact_rows.push_back(std::move(row));
  }
  summary["exact_distribution"] = std::move(exact_rows);
  Json sampled_rows = Json::array();
  for (const auto& [event, count] : histogram) {
    Json row;
    row["counts"] = event_to_json(event);
    row["count"] = count;
    row["frequency"] =
        static_cast<double>(count) / static_cast<double>(config.trials);
    sampled_rows.push_back(std::move(row));
  }
  summary["sampled_distribution"] = std::move(sampled_rows);
  summary["fidelity_to_direct_superposition"] = fidelity(state, direct);

  {
    ArtifactWriter writer(path, result);
    if (config.output_format == OutputFormat::kJson) {
      JsonRecordWriter json(writer.stream());
      RandomStream echo(*config.seed);
      for (long long i = 0; i < config.trials; ++i) {
        Json record;
        record["trial_seed"] = echo.substream(i).seed();
        record["counts"] = event_to_json(events[static_cast<std::size_t>(i)]);
        json.add(record);
      }
      json.finish(summary);
    } else {
      writer.stream() << "trial_seed,n_a,n_b\n";
      RandomStream echo(*config.seed);
      for (long long i = 0; i < config.trials; ++i) {
        const auto& event = events[static_cast<std::size_t>(i)];
        writer.stream() << echo.substream(i).seed() << ','
                        << event.counts.at("A") << ',' << event.counts.at("B")
                        << '\n';
      }
      write_summary_sidecar(path, summary, result);
    }
  }
  if (options.dump_state) {
    write_state_sidecar(path, state, result);
  }
}

struct TeleportAggregates {
  long long success = 0;
  long long psi_plus = 0;
  long long psi_minus = 0;
  long long fail_vacuum = 0;
  long long fail_two_photon = 0;
  double fidelity_sum = 0.0;
  double verification_sum = 0.0;

  void absorb(const TeleportRecord& record) {
    switch (record.outcome.kind) {
      case BellOutcomeKind::kPsiPlus:
        ++psi_plus;
        break;
      case BellOutcomeKind::kPsiMinus:
        ++psi_minus;
        break;
      case BellOutcomeKind::kFailure:
        if (record.outcome.event.total() == 0) {
          ++fail_vacuum;
        } else {
          ++fail_two_photon;
        }
        break;
    }
    if (record.outcome.success()) {
      ++success;
      fidelity_sum += record.fidelity_to_target.value_or(0.0);
    }
  }

  Json to_json(long long trials, bool with_verification) const {
    Json out;
    out["success_count"] = success;
    out["success_fraction"] =
        static_cast<double>(success) / static_cast<double>(trials);
    Json counts;
    counts["psi_plus"] = psi_plus;
    counts["psi_minus"] = psi_minus;
    counts["fail_vacuum"] = fail_vacuum;
    counts["fail_two_photon"] = fail_two_photon;
    out["sector_counts"] = std::move(counts);
    Json fractions;
    auto frac = [&](long long n) {
      return static_cast<double>(n) / static_cast<double>(trials);
    };
    fractions["psi_plus"] = frac(psi_plus);
    fractions["psi_minus"] = frac(psi_minus);
    fractions["fail_vacuum"] = frac(fail_vacuum);
    fractions["fail_two_photon"] = frac(fail_two_photon);
    out["sector_fractions"] = std::move(fractions);
    out["corrections_applied"] = psi_minus;
    out["mean_success_fidelity"] =
        success > 0 ? Json(fidelity_sum / static_cast<double>(success))
                    : Json(nullptr);
    if (with_verification) {
      out["mean_verification_probability"] =
          success > 0 ? Json(verification_sum / static_cast<double>(success))
                      : Json(nullptr);
    }
    return out;
  }
};

void write_teleport_csv_row(std::ofstream& out, const TeleportRecord& record) {
  out << record.trial_seed << ','
      << bell_outcome_kind_name(record.outcome.kind) << ','
      << record.outcome.event.counts.at("E") << ','
      << record.outcome.event.counts.at("F") << ','
      << format_bool(record.correction_applied) << ',';
  if (record.fidelity_to_target) {
    out << format_double(*record.fidelity_to_target);
  }
  out << '\n';
}

void run_teleport(const ExperimentConfig& config, const fs::path& path,
                  RunResult& result) {
  const bool entangled = *config.experiment == Experiment::kTeleportEntangled;
  const QubitAmplitudes qubit =
      entangled ? QubitAmplitudes(1.0, 0.0) : qubit_from_spec(*config.qubit);
  std::optional<BeamSplitterParams> params;
  if (entangled) params = splitter_from_spec(*config.bs);

  RandomStream base(*config.seed);
  TeleportAggregates aggregates;

  ArtifactWriter writer(path, result);
  std::optional<JsonRecordWriter> json;
  if (config.output_format == OutputFormat::kJson) {
    json.emplace(writer.stream());
  } else {
    writer.stream()
        << "trial_seed,outcome,e,f,correction_applied,fidelity_to_target\n";
  }

  for (long long i = 0; i < config.trials; ++i) {
    RandomStream trial_stream = base.substream(static_cast<std::uint64_t>(i));
    TeleportRecord record = entangled
                                ? teleport_entangled(*params, trial_stream)
                                : teleport(qubit, trial_stream);
    if (entangled && record.outcome.success()) {
      aggregates.verification_sum +=
          verify_teleportation(*record.bob_state, *params);
    }
    aggregates.absorb(record);
    if (json) {
      json->add(teleport_record_to_json(record));
    } else {
      write_teleport_csv_row(writer.stream(), record);
    }
  }

  Json summary = config_echo(config);
  if (entangled) {
    Json bs;
    bs["t_re"] = params->t.real();
    bs["t_im"] = params->t.imag();
    bs["r_re"] = params->r.real();
    bs["r_im"] = params->r.imag();
    summary["bs"] = std::move(bs);
  } else {
    Json q;
    q["a_re"] = qubit.a.real();
    q["a_im"] = qubit.a.imag();
    q["b_re"] = qubit.b.real();
    q["b_im"] = qubit.b.imag();
    summary["qubit"] = std::move(q);
  }
  summary.update(aggregates.to_json(config.trials, entangled));

  if (json) {
    json->finish(summary);
  } else {
    write_summary_sidecar(path, summary, result);
  }
}

// Empirical margin band used when cross-checking the two inequality forms:
// five binomial standard deviations of (N_A + N_B - N_AB)/N.
double margin_band(double phi_a, double phi_b, long long trials) {
  double pa = mz_probability(phi_a, 0.0);
  double pb = mz_probability(0.0, phi_b);
  double pab = mz_probability(phi_a, phi_b);
  double variance = pa * (1.0 - pa) + pb * (1.0 - pb) + pab * (1.0 - pab);
  return 5.0 * std::sqrt(variance / static_cast<double>(trials));
}

void run_bell_scan(const ExperimentConfig& config, const fs::path& path,
                   RunResult& result) {
  const auto settings = config.phases->settings();
  ArtifactWriter writer(path, result);
  std::optional<JsonRecordWriter> json;
  if (config.output_format == OutputFormat::kJson) {
    json.emplace(writer.stream());
  } else {
    writer.stream() << "phi_a,phi_b,p_analytic,n_a,n_b,n_ab,margin,violated,"
                       "p_ac,p_bc,p_ab,corr_satisfied\n";
  }

  long long violated_rows = 0;
  bool verdicts_consistent = true;
  const std::uint64_t row_stride =
      3 * static_cast<std::uint64_t>(config.trials);
  for (std::size_t row = 0; row < settings.size(); ++row) {
    const auto [phi_a, phi_b] = settings[row];
    RandomStream row_stream(*config.seed + row * row_stride);
    BellCounts counts =
        run_bell_experiment(phi_a, phi_b, config.trials, row_stream);
    CorrelationForm corr = bell_correlation_form(phi_a, phi_b);
    const bool violated = !bell_inequality_holds(counts);
    const double p_analytic = mz_probability(phi_a, phi_b);
    if (violated) ++violated_rows;

    const double analytic_margin = bell_margin_analytic(phi_a, phi_b);
    if (std::abs(analytic_margin) > margin_band(phi_a, phi_b, config.trials) &&
        violated != !corr.satisfied) {
      verdicts_consistent = false;
    }

    if (json) {
      Json record = bell_counts_to_json(counts);
      record["p_analytic"] = p_analytic;
      record["violated"] = violated;
      record["p_ac"] = corr.p_ac;
      record["p_bc"] = corr.p_bc;
      record["p_ab"] = corr.p_ab;
      record["corr_satisfied"] = corr.satisfied;
      json->add(record);
    } else {
      writer.stream() << format_double(phi_a) << ',' << format_double(phi_b)
                      << ',' << format_double(p_analytic) << ','
                      << counts.n_a() << ',' << counts.n_b() << ','
                      << counts.n_ab() << ',' << format_double(counts.margin())
                      << ',' << format_bool(violated) << ','
                      << format_double(corr.p_ac) << ','
                      << format_double(corr.p_bc) << ','
                      << format_double(corr.p_ab) << ','
                      << format_bool(corr.satisfied) << '\n';
    }
  }

  Json summary = config_echo(config);
  summary["rows"] = settings.size();
  summary["violated_rows"] = violated_rows;
  summary["verdicts_consistent"] = verdicts_consistent;
  if (json) {
    json->finish(summary);
  } else {
    write_summary_sidecar(path, summary, result);
  }
}

void run_mz_single(const ExperimentConfig& config, const fs::path& path,
                   RunResult& result) {
  const auto settings = config.phases->settings();
  ArtifactWriter writer(path, result);
  std::optional<JsonRecordWriter> json;
  if (config.output_format == OutputFormat::kJson) {
    json.emplace(writer.stream());
  } else {
    writer.stream()
        << "phi_a,phi_b,p_analytic,p_simulated,n_dc,n_dd,frequency_dd\n";
  }

  RandomStream base(*config.seed);
  double max_abs_error = 0.0;
  std::uint64_t trial_index = 0;
  for (const auto& [phi_a, phi_b] : settings) {
    const double p_analytic = mz_probability(phi_a, phi_b);
    const double p_simulated = mz_click_probability(phi_a, phi_b);
    max_abs_error = std::max(max_abs_error, std::abs(p_analytic - p_simulated));

    PureState out = mz_output_state(phi_a, phi_b);
    long long n_dd = 0;
    for (long long i = 0; i < config.trials; ++i, ++trial_index) {
      RandomStream trial_stream = base.substream(trial_index);
      Sample shot = sample(out, {"C", "D"}, trial_stream);
      if (shot.event.counts.at("D") == 1) ++n_dd;
    }
    const long long n_dc = config.trials - n_dd;
    const double frequency =
        static_cast<double>(n_dd) / static_cast<double>(config.trials);

    if (json) {
      Json record;
      record["phi_a"] = phi_a;
      record["phi_b"] = phi_b;
      record["p_analytic"] = p_analytic;
      record["p_simulated"] = p_simulated;
      record["n_dc"] = n_dc;
      record["n_dd"] = n_dd;
      record["frequency_dd"] = frequency;
      json->add(record);
    } else {
      writer.stream() << format_double(phi_a) << ',' << format_double(phi_b)
                      << ',' << format_double(p_analytic) << ','
                      << format_double(p_simulated) << ',' << n_dc << ','
                      << n_dd << ',' << format_double(frequency) << '\n';
    }
  }

  Json summary = config_echo(config);
  summary["rows"] = settings.size();
  summary["max_abs_error"] = max_abs_error;
  if (json) {
    json->finish(summary);
  } else {
    write_summary_sidecar(path, summary, result);
  }
}

}  // namespace

RunResult run(const ExperimentConfig& config, const RunOptions& options) {
  RunResult result;
  result.violations = validate(config);
  if (!result.violations.empty()) {
    result.exit_code = kExitConfigError;
    return result;
  }

  fs::path path = config.resolved_output_path();
  if (options.output_dir && path.is_relative()) {
    path = fs::path(*options.output_dir) / path;
  }

  try {
    switch (*config.experiment) {
      case Experiment::kEntangle:
        run_entangle(config, options, path, result);
        break;
      case Experiment::kTeleport:
      case Experiment::kTeleportEntangled:
        run_teleport(config, path, result);
        break;
      case Experiment::kBellScan:
        run_bell_scan(config, path, result);
        break;
      case Experiment::kMzSingle:
        run_mz_single(config, path, result);
        break;
    }
  } catch (const std::runtime_error& e) {
    // Filesystem-level failures are configuration problems, not engine
    // invariant breaches.
    result.exit_code = kExitConfigError;
    result.violations.push_back(e.what());
    return result;
  }
  result.exit_code = kExitOk;
  return result;
}

}  // namespace singlerail
