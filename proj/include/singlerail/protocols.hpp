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

#include "singlerail/fock.hpp"
#include "singlerail/measurement.hpp"
#include "singlerail/optics.hpp"
#include "singlerail/random.hpp"

namespace singlerail {

// Single-rail qubit amplitudes: a multiplies the one-photon state, b the
// vacuum. |a|^2 + |b|^2 = 1 within 1e-9 is required at construction;
// normalized() rescales instead.
struct QubitAmplitudes {
  Complex a;
  Complex b;

  QubitAmplitudes(Complex a_in, Complex b_in);
  static QubitAmplitudes normalized(Complex a_in, Complex b_in);
};

inline constexpr double kQubitNormTolerance = 1e-9;

enum class BellOutcomeKind { kPsiPlus, kPsiMinus, kFailure };

// Classification of the joint (E, F) detector reading: one photon at F
// alone signals Psi+, one photon at E alone signals Psi-, anything else
// (vacuum or a two-photon event) is a failure.
struct BellOutcome {
  BellOutcomeKind kind = BellOutcomeKind::kFailure;
  DetectionEvent event;

  bool success() const { return kind != BellOutcomeKind::kFailure; }
};

BellOutcome classify_bell_outcome(const DetectionEvent& event);

// Full audit of one teleportation trial. bob_state and fidelity_to_target
// are present exactly on success; post_measurement_state keeps the raw
// conditional state of every branch for diagnostics.
struct TeleportRecord {
  BellOutcome outcome;
  bool correction_applied = false;
  std::optional<PureState> bob_state;
  std::optional<double> fidelity_to_target;
  std::uint64_t trial_seed = 0;
  std::optional<PureState> post_measurement_state;
};

// The single-photon path-entangled state (|1>_A|0>_B + |0>_A|1>_B)/sqrt(2),
// produced by a compensated splitter fed with one photon.
PureState generate_entangled();

// One teleportation trial of the single-rail qubit a|1> + b|0>: entangle,
// mix the sender's half with the message mode on a compensated splitter,
// detect at (E, F), classify, and on Psi- apply the pi corrective phase at
// the receiver.
TeleportRecord teleport(const QubitAmplitudes& target, RandomStream& stream);

// Variant that teleports one half of the mode-entangled pair
// t|1>_C|0>_D + r|0>_C|1>_D; on success the receiver and the retained
// mode D end up in t|1>_B|0>_D + r|0>_B|1>_D.
TeleportRecord teleport_entangled(const BeamSplitterParams& params,
                                  RandomStream& stream);

// Recombines modes (B, D) on a splitter with the same coefficients used to
// prepare the pair, oriented so a faithful joint state sends the photon to
// the G port with certainty. Returns the probability of the (G:1, H:0)
// event.
double verify_teleportation(const PureState& joint_state,
                            const BeamSplitterParams& params);

// Analytic probability sin^2((phi_a + phi_b)/2) that the interferometer
// photon switches to the D_D detector.
double mz_probability(double phi_a, double phi_b);

// Full Mach-Zehnder simulation: compensated splitter, phase phi_a on the
// reflected arm and -phi_b on the transmitted arm, second compensated
// splitter oriented so zero phases send the photon to D_C. Output register
// is (D, C).
PureState mz_output_state(double phi_a, double phi_b);

// P(D_D fires) extracted from mz_output_state.
double mz_click_probability(double phi_a, double phi_b);

struct ConfigurationCounts {
  long long n_dc = 0;
  long long n_dd = 0;
};

// Counts from one Bell-test run: n_trials single-photon interferometer
// shots under each shifter configuration (only Alice's, only Bob's, both).
struct BellCounts {
  double phi_a = 0.0;
  double phi_b = 0.0;
  long long n_trials = 0;
  ConfigurationCounts alice_only;
  ConfigurationCounts bob_only;
  ConfigurationCounts both;

  long long n_a() const { return alice_only.n_dd; }
  long long n_b() const { return bob_only.n_dd; }
  long long n_ab() const { return both.n_dd; }
  double margin() const {
    return static_cast<double>(n_a() + n_b() - n_ab()) /
           static_cast<double>(n_trials);
  }
};

BellCounts run_bell_experiment(double phi_a, double phi_b, long long n_trials,
                               RandomStream& stream);

// The locality bound N_AB <= N_A + N_B.
bool bell_inequality_holds(const BellCounts& counts);

// Bell's correlation inequality evaluated for the interferometer settings
// with P(a,c) = -cos(phi_a), P(b,c) = -cos(phi_b) and
// P(a,b) = -cos(phi_a + phi_b). `satisfied` tests the side
// 1 + P(b,c) >= P(a,b) - P(a,c), the instance the photon-count bound maps
// onto: its margin is exactly twice the count-form margin
// sin^2(phi_a/2) + sin^2(phi_b/2) - sin^2((phi_a+phi_b)/2), so the two
// verdicts agree at every setting.
struct CorrelationForm {
  double p_ac = 0.0;
  double p_bc = 0.0;
  double p_ab = 0.0;
  bool satisfied = true;
};

CorrelationForm bell_correlation_form(double phi_a, double phi_b);

// Signed analytic margin of the count inequality; negative means violated.
double bell_margin_analytic(double phi_a, double phi_b);

}  // namespace singlerail
