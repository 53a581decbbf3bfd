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

#include "singlerail/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace singlerail {

namespace {

constexpr double kPi = std::numbers::pi;

// a|1> + b|0> on a fresh single-mode register.
PureState qubit_state(const std::string& mode, const QubitAmplitudes& q) {
  ModeRegister reg({mode}, 1);
  PureState::AmplitudeMap amps;
  amps.emplace(Occupation{1}, q.a);
  amps.emplace(Occupation{0}, q.b);
  return PureState(std::move(reg), std::move(amps)).normalized();
}

// t|1>_C|0>_D + r|0>_C|1>_D: a photon enters the D-side port of a bare
// splitter; C carries the transmitted wave. A -pi/2 shifter on the
// reflected port absorbs the fixed reflection phase, so the caller's
// (t, r) parametrize the output amplitudes directly.
PureState prepare_split_photon(const BeamSplitterParams& params) {
  ModeRegister reg({"C", "D"}, 2);
  PureState input = basis_state(reg, {0, 1});
  PureState split = apply_beam_splitter(input, "C", "D", params);
  return apply_phase_shifter(split, "D", PhaseShift{-kPi / 2.0});
}

// Shared Bell-analysis step: mix sender mode A with message mode C on the
// compensated splitter, relabel the outputs (E, F), and detect.
Sample bell_measurement(const PureState& joint_input, RandomStream& stream) {
  PureState mixed = apply_compensated_splitter(joint_input, "A", "C");
  mixed = renamed(mixed, "A", "E");
  mixed = renamed(mixed, "C", "F");
  return sample(mixed, {"E", "F"}, stream);
}

}  // namespace

QubitAmplitudes::QubitAmplitudes(Complex a_in, Complex b_in)
    : a(a_in), b(b_in) {
  double total = std::norm(a) + std::norm(b);
  if (std::abs(total - 1.0) > kQubitNormTolerance) {
    throw std::invalid_argument(
        "qubit amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
}

QubitAmplitudes QubitAmplitudes::normalized(Complex a_in, Complex b_in) {
  double n = std::sqrt(std::norm(a_in) + std::norm(b_in));
  if (n == 0.0) {
    throw std::invalid_argument("qubit amplitudes cannot both vanish");
  }
  return QubitAmplitudes(a_in / n, b_in / n);
}

BellOutcome classify_bell_outcome(const DetectionEvent& event) {
  if (event.counts.size() != 2 || !event.counts.contains("E") ||
      !event.counts.contains("F")) {
    throw std::invalid_argument(
        "Bell outcome classification expects counts at exactly (E, F)");
  }
  const int e = event.counts.at("E");
  const int f = event.counts.at("F");
  if (e < 0 || f < 0 || e + f > 2) {
    throw std::invalid_argument("malformed (E, F) detection event");
  }
  BellOutcome outcome;
  outcome.event = event;
  if (e == 0 && f == 1) {
    outcome.kind = BellOutcomeKind::kPsiPlus;
  } else if (e == 1 && f == 0) {
    outcome.kind = BellOutcomeKind::kPsiMinus;
  } else {
    outcome.kind = BellOutcomeKind::kFailure;
  }
  return outcome;
}

PureState generate_entangled() {
  ModeRegister reg({"I", "J"}, kDefaultCutoff);
  PureState photon = basis_state(reg, {1, 0});
  PureState split = apply_compensated_splitter(photon, "I", "J");
  return renamed(renamed(split, "I", "A"), "J", "B");
}

TeleportRecord teleport(const QubitAmplitudes& target, RandomStream& stream) {
  static const PureState kEntangled = generate_entangled();

  PureState input = tensor(kEntangled, qubit_state("C", target));
  Sample detected = bell_measurement(input, stream);

  TeleportRecord record;
  record.trial_seed = stream.seed();
  record.outcome = classify_bell_outcome(detected.event);
  record.post_measurement_state = detected.state;
  record.correction_applied =
      record.outcome.kind == BellOutcomeKind::kPsiMinus;

  if (record.outcome.success()) {
    PureState bob = std::move(detected.state);
    if (record.correction_applied) {
      bob = apply_phase_shifter(bob, "B", PhaseShift{kPi});
    }
    record.fidelity_to_target = fidelity(bob, qubit_state("B", target));
    record.bob_state = std::move(bob);
  }
  return record;
}

TeleportRecord teleport_entangled(const BeamSplitterParams& params,
                                  RandomStream& stream) {
  static const PureState kEntangled = generate_entangled();

  PureState input = tensor(kEntangled, prepare_split_photon(params));
  Sample detected = bell_measurement(input, stream);

  TeleportRecord record;
  record.trial_seed = stream.seed();
  record.outcome = classify_bell_outcome(detected.event);
  record.post_measurement_state = detected.state;
  record.correction_applied =
      record.outcome.kind == BellOutcomeKind::kPsiMinus;

  if (record.outcome.success()) {
    PureState joint = std::move(detected.state);
    if (record.correction_applied) {
      joint = apply_phase_shifter(joint, "B", PhaseShift{kPi});
    }
    ModeRegister target_reg({"B", "D"}, 2);
    PureState::AmplitudeMap amps;
    amps.emplace(Occupation{1, 0}, params.t);
    amps.emplace(Occupation{0, 1}, params.r);
    PureState target(std::move(target_reg), std::move(amps));
    record.fidelity_to_target = fidelity(joint, target);
    record.bob_state = std::move(joint);
  }
  return record;
}

double verify_teleportation(const PureState& joint_state,
                            const BeamSplitterParams& params) {
  const ModeRegister& reg = joint_state.mode_register();
  if (reg.labels() != std::vector<std::string>{"B", "D"}) {
    throw std::invalid_argument(
        "verification expects a state on modes (B, D)");
  }
  // Splitter with the preparation coefficients run in reverse: the row
  // (conj t, conj r) collects a faithful t|1,0> + r|0,1> into the first
  // output port with unit probability; the orthogonal row feeds the other.
  Eigen::Matrix2cd reverse;
  reverse << std::conj(params.t), std::conj(params.r), -params.r, params.t;
  PureState recombined = apply_two_mode_element(joint_state, "B", "D", reverse);
  recombined = renamed(renamed(recombined, "B", "G"), "D", "H");
  DetectionEvent success{{{"G", 1}, {"H", 0}}};
  return outcome_distribution(recombined, {"G", "H"}).probability(success);
}

double mz_probability(double phi_a, double phi_b) {
  double s = std::sin((phi_a + phi_b) / 2.0);
  return s * s;
}

PureState mz_output_state(double phi_a, double phi_b) {
  ModeRegister reg({"I", "J"}, kDefaultCutoff);
  PureState state = basis_state(reg, {1, 0});
  state = apply_compensated_splitter(state, "I", "J");
  state = renamed(renamed(state, "I", "A"), "J", "B");
  state = apply_phase_shifter(state, "A", PhaseShift{phi_a});
  state = apply_phase_shifter(state, "B", PhaseShift{-phi_b});
  state = apply_compensated_splitter(state, "A", "B");
  // Zero phases leave the photon in the second output port, so that port
  // is the D_C detector.
  return renamed(renamed(state, "A", "D"), "B", "C");
}

double mz_click_probability(double phi_a, double phi_b) {
  PureState out = mz_output_state(phi_a, phi_b);
  DetectionEvent dd_click{{{"C", 0}, {"D", 1}}};
  return outcome_distribution(out, {"C", "D"}).probability(dd_click);
}

BellCounts run_bell_experiment(double phi_a, double phi_b, long long n_trials,
                               RandomStream& stream) {
  if (n_trials < 1) {
    throw std::invalid_argument("Bell experiment needs at least one trial");
  }
  BellCounts counts;
  counts.phi_a = phi_a;
  counts.phi_b = phi_b;
  counts.n_trials = n_trials;

  struct Configuration {
    double a;
    double b;
    ConfigurationCounts* bucket;
  };
  const Configuration configurations[] = {
      {phi_a, 0.0, &counts.alice_only},
      {0.0, phi_b, &counts.bob_only},
      {phi_a, phi_b, &counts.both},
  };

  std::uint64_t trial_index = 0;
  for (const auto& config : configurations) {
    PureState out = mz_output_state(config.a, config.b);
    for (long long i = 0; i < n_trials; ++i, ++trial_index) {
      RandomStream trial_stream = stream.substream(trial_index);
      Sample shot = sample(out, {"C", "D"}, trial_stream);
      if (shot.event.counts.at("D") == 1) {
        ++config.bucket->n_dd;
      } else {
        ++config.bucket->n_dc;
      }
    }
  }
  return counts;
}

bool bell_inequality_holds(const BellCounts& counts) {
  return counts.n_ab() <= counts.n_a() + counts.n_b();
}

CorrelationForm bell_correlation_form(double phi_a, double phi_b) {
  CorrelationForm form;
  form.p_ac = -std::cos(phi_a);
  form.p_bc = -std::cos(phi_b);
  form.p_ab = -std::cos(phi_a + phi_b);
  form.satisfied = 1.0 + form.p_bc >= form.p_ab - form.p_ac;
  return form;
}

double bell_margin_analytic(double phi_a, double phi_b) {
  return mz_probability(phi_a, 0.0) + mz_probability(0.0, phi_b) -
         mz_probability(phi_a, phi_b);
}

}  // namespace singlerail
