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

#include "singlerail/serialize.hpp"

namespace singlerail {

Json state_to_json(const PureState& state) {
  Json amplitudes = Json::array();
  // std::map iteration is already lexicographic in the occupation vector.
  for (const auto& [occ, amp] : state.amplitudes()) {
    Json record;
    record["occupations"] = occ;
    record["re"] = amp.real();
    record["im"] = amp.imag();
    amplitudes.push_back(std::move(record));
  }
  Json out;
  out["modes"] = state.mode_register().labels();
  out["amplitudes"] = std::move(amplitudes);
  return out;
}

Json event_to_json(const DetectionEvent& event) {
  Json counts;
  for (const auto& [mode, count] : event.counts) counts[mode] = count;
  return counts;
}

std::string bell_outcome_kind_name(BellOutcomeKind kind) {
  switch (kind) {
    case BellOutcomeKind::kPsiPlus:
      return "psi_plus";
    case BellOutcomeKind::kPsiMinus:
      return "psi_minus";
    case BellOutcomeKind::kFailure:
      return "failure";
  }
  return "failure";
}

Json teleport_record_to_json(const TeleportRecord& record) {
  Json out;
  out["trial_seed"] = record.trial_seed;
  Json outcome;
  outcome["kind"] = bell_outcome_kind_name(record.outcome.kind);
  outcome["event"] = event_to_json(record.outcome.event);
  out["outcome"] = std::move(outcome);
  out["correction_applied"] = record.correction_applied;
  out["bob_state"] =
      record.bob_state ? state_to_json(*record.bob_state) : Json(nullptr);
  out["fidelity_to_target"] = record.fidelity_to_target
                                  ? Json(*record.fidelity_to_target)
                                  : Json(nullptr);
  return out;
}

Json bell_counts_to_json(const BellCounts& counts) {
  auto configuration = [](const ConfigurationCounts& c) {
    Json out;
    out["n_dc"] = c.n_dc;
    out["n_dd"] = c.n_dd;
    return out;
  };
  Json out;
  out["phi_a"] = counts.phi_a;
  out["phi_b"] = counts.phi_b;
  out["n_trials"] = counts.n_trials;
  Json grouped;
  grouped["alice_only"] = configuration(counts.alice_only);
  grouped["bob_only"] = configuration(counts.bob_only);
  grouped["both"] = configuration(counts.both);
  out["counts"] = std::move(grouped);
  out["n_a"] = counts.n_a();
  out["n_b"] = counts.n_b();
  out["n_ab"] = counts.n_ab();
  out["margin"] = counts.margin();
  return out;
}

}  // namespace singlerail
