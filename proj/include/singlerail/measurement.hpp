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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singlerail/fock.hpp"
#include "singlerail/random.hpp"

namespace singlerail {

// Joint photon counts recorded by number-resolving detectors; the keys are
// exactly the measured mode labels.
struct DetectionEvent {
  std::map<std::string, int> counts;

  int total() const;
  auto operator<=>(const DetectionEvent&) const = default;
};

// Born-rule distribution over joint detection events. Entries iterate in
// lexicographic order of the (mode-sorted) count vectors, which fixes the
// inverse-CDF sampling order across platforms.
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::map<DetectionEvent, double> entries);

  const std::map<DetectionEvent, double>& entries() const { return entries_; }
  double probability(const DetectionEvent& event) const;
  double total() const;

 private:
  std::map<DetectionEvent, double> entries_;
};

// Marginal distribution of joint photon counts in `modes`, summing
// |amplitude|^2 over the unmeasured-mode configurations.
OutcomeDistribution outcome_distribution(const PureState& state,
                                         const std::vector<std::string>& modes);

// Result of conditioning on one detection event. `state` is absent when
// the event has zero probability.
struct PostSelection {
  double probability = 0.0;
  std::optional<PureState> state;
};

// Born weight of `event` together with the renormalized state on the
// remaining modes (the measured modes leave the register).
PostSelection post_select(const PureState& state, const DetectionEvent& event);

struct Sample {
  DetectionEvent event;
  PureState state;  // conditional state on the unmeasured modes
};

// One detection draw via inverse-CDF over the sorted event list. Identical
// (seed, state) pairs reproduce identical draws.
Sample sample(const PureState& state, const std::vector<std::string>& modes,
              RandomStream& stream);

// Detector response model. Unit efficiency (the default) reports events
// verbatim; efficiency < 1 drops each photon independently with
// probability 1 - efficiency. Not used by any protocol path.
struct DetectorModel {
  double efficiency = 1.0;

  DetectionEvent thin(const DetectionEvent& event, RandomStream& stream) const;
};

}  // namespace singlerail
