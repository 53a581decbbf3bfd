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

#include "singlerail/measurement.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace singlerail {

namespace {

constexpr double kProbabilityFloor = -1e-15;

std::vector<int> mode_indices(const ModeRegister& reg,
                              const std::vector<std::string>& modes) {
  if (modes.empty()) {
    throw std::invalid_argument("measurement needs at least one mode");
  }
  std::set<std::string> seen;
  std::vector<int> indices;
  indices.reserve(modes.size());
  for (const auto& mode : modes) {
    if (!seen.insert(mode).second) {
      throw std::invalid_argument("duplicate measurement mode '" + mode + "'");
    }
    indices.push_back(reg.require_index(mode));
  }
  return indices;
}

}  // namespace

int DetectionEvent::total() const {
  int sum = 0;
  for (const auto& [mode, count] : counts) sum += count;
  return sum;
}

OutcomeDistribution::OutcomeDistribution(
    std::map<DetectionEvent, double> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second < kProbabilityFloor) {
      throw std::invalid_argument("negative probability in distribution");
    }
    it->second = std::max(it->second, 0.0);
    if (it->second == 0.0) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

double OutcomeDistribution::probability(const DetectionEvent& event) const {
  auto it = entries_.find(event);
  return it == entries_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
  double sum = 0.0;
  for (const auto& [event, p] : entries_) sum += p;
  return sum;
}

OutcomeDistribution outcome_distribution(
    const PureState& state, const std::vector<std::string>& modes) {
  std::vector<int> indices = mode_indices(state.mode_register(), modes);
  std::map<DetectionEvent, double> probs;
  for (const auto& [occ, amp] : state.amplitudes()) {
    DetectionEvent event;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      event.counts[modes[i]] = occ[indices[i]];
    }
    probs[std::move(event)] += std::norm(amp);
  }
  return OutcomeDistribution(std::move(probs));
}

PostSelection post_select(const PureState& state, const DetectionEvent& event) {
  const ModeRegister& reg = state.mode_register();
  std::vector<std::string> modes;
  modes.reserve(event.counts.size());
  for (const auto& [mode, count] : event.counts) {
    if (count < 0) {
      throw std::invalid_argument("detection event with negative count");
    }
    modes.push_back(mode);
  }
  std::vector<int> measured = mode_indices(reg, modes);
  std::vector<bool> is_measured(reg.size(), false);
  for (int idx : measured) is_measured[idx] = true;

  std::vector<std::string> remaining_labels;
  for (int i = 0; i < reg.size(); ++i) {
    if (!is_measured[i]) remaining_labels.push_back(reg.label(i));
  }

  PureState::AmplitudeMap branch;
  double probability = 0.0;
  for (const auto& [occ, amp] : state.amplitudes()) {
    bool matches = true;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (occ[measured[i]] != event.counts.at(modes[i])) {
        matches = false;
        break;
      }
    }
    if (!matches) continue;
    probability += std::norm(amp);
    Occupation reduced;
    reduced.reserve(remaining_labels.size());
    for (int i = 0; i < reg.size(); ++i) {
      if (!is_measured[i]) reduced.push_back(occ[i]);
    }
    branch.emplace(std::move(reduced), amp);
  }

  if (branch.empty()) {
    return PostSelection{0.0, std::nullopt};
  }
  double scale = 1.0 / std::sqrt(probability);
  for (auto& [occ, amp] : branch) amp *= scale;
  ModeRegister reduced_reg(remaining_labels, reg.cutoff());
  return PostSelection{probability,
                       PureState(std::move(reduced_reg), std::move(branch))};
}

Sample sample(const PureState& state, const std::vector<std::string>& modes,
              RandomStream& stream) {
  OutcomeDistribution dist = outcome_distribution(state, modes);
  if (dist.entries().empty()) {
    throw std::invalid_argument("cannot sample from an empty distribution");
  }
  const double u = stream.next_double() * dist.total();
  double cumulative = 0.0;
  const DetectionEvent* chosen = nullptr;
  for (const auto& [event, p] : dist.entries()) {
    cumulative += p;
    chosen = &event;
    if (u < cumulative) break;
  }
  PostSelection post = post_select(state, *chosen);
  return Sample{*chosen, std::move(*post.state)};
}

DetectionEvent DetectorModel::thin(const DetectionEvent& event,
                                   RandomStream& stream) const {
  if (efficiency < 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("detector efficiency must lie in [0, 1]");
  }
  if (efficiency == 1.0) return event;
  DetectionEvent thinned;
  for (const auto& [mode, count] : event.counts) {
    int kept = 0;
    for (int i = 0; i < count; ++i) {
      if (stream.next_double() < efficiency) ++kept;
    }
    thinned.counts[mode] = kept;
  }
  return thinned;
}

}  // namespace singlerail
