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

#include "singlerail/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace singlerail {

namespace {

std::string occupation_to_string(const Occupation& occ) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i) out << ',';
    out << occ[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

ModeRegister::ModeRegister(std::vector<std::string> labels, int cutoff)
    : labels_(std::move(labels)), cutoff_(cutoff) {
  if (cutoff_ < 0) {
    throw std::invalid_argument("mode register cutoff must be non-negative");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw std::invalid_argument("mode labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate mode label '" + label + "'");
    }
  }
}

int ModeRegister::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

int ModeRegister::require_index(std::string_view label) const {
  int idx = index_of(label);
  if (idx < 0) {
    throw std::invalid_argument("mode label '" + std::string(label) +
                                "' not in register");
  }
  return idx;
}

PureState::PureState(ModeRegister reg, AmplitudeMap amplitudes)
    : register_(std::move(reg)), amps_(std::move(amplitudes)) {
  for (auto it = amps_.begin(); it != amps_.end();) {
    const Occupation& occ = it->first;
    if (static_cast<int>(occ.size()) != register_.size()) {
      throw std::invalid_argument(
          "occupation " + occupation_to_string(occ) + " has " +
          std::to_string(occ.size()) + " entries; register has " +
          std::to_string(register_.size()) + " modes");
    }
    int total = 0;
    for (int n : occ) {
      if (n < 0) {
        throw std::invalid_argument("negative photon count in occupation " +
                                    occupation_to_string(occ));
      }
      total += n;
    }
    if (total > register_.cutoff()) {
      throw std::invalid_argument(
          "occupation " + occupation_to_string(occ) + " holds " +
          std::to_string(total) + " photons; register cutoff is " +
          std::to_string(register_.cutoff()));
    }
    if (std::abs(it->second) < kAmplitudeEpsilon) {
      it = amps_.erase(it);
    } else {
      ++it;
    }
  }
}

Complex PureState::amplitude(const Occupation& occ) const {
  auto it = amps_.find(occ);
  return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
}

double PureState::squared_norm() const {
  double total = 0.0;
  for (const auto& [occ, amp] : amps_) total += std::norm(amp);
  return total;
}

double PureState::norm() const { return std::sqrt(squared_norm()); }

PureState PureState::normalized() const {
  double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  AmplitudeMap scaled = amps_;
  for (auto& [occ, amp] : scaled) amp /= n;
  return PureState(register_, std::move(scaled));
}

PureState basis_state(const ModeRegister& reg, const Occupation& occupations) {
  PureState::AmplitudeMap amps;
  amps.emplace(occupations, Complex{1.0, 0.0});
  return PureState(reg, std::move(amps));
}

PureState superpose(
    const std::vector<std::pair<Complex, PureState>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("superpose requires at least one term");
  }
  const ModeRegister& first = terms.front().second.mode_register();
  int cutoff = first.cutoff();
  for (const auto& [coeff, state] : terms) {
    if (!state.mode_register().same_modes(first)) {
      throw std::invalid_argument("superpose: register mismatch");
    }
    cutoff = std::max(cutoff, state.mode_register().cutoff());
  }
  PureState::AmplitudeMap acc;
  for (const auto& [coeff, state] : terms) {
    for (const auto& [occ, amp] : state.amplitudes()) {
      acc[occ] += coeff * amp;
    }
  }
  PureState combined(ModeRegister(first.labels(), cutoff), std::move(acc));
  if (combined.amplitudes().empty()) {
    throw std::invalid_argument("superposition cancels to the zero vector");
  }
  return combined.normalized();
}

PureState tensor(const PureState& s1, const PureState& s2) {
  const ModeRegister& r1 = s1.mode_register();
  const ModeRegister& r2 = s2.mode_register();
  for (const auto& label : r2.labels()) {
    if (r1.contains(label)) {
      throw std::invalid_argument("tensor: mode label '" + label +
                                  "' appears in both registers");
    }
  }
  std::vector<std::string> labels = r1.labels();
  labels.insert(labels.end(), r2.labels().begin(), r2.labels().end());
  ModeRegister combined(std::move(labels), r1.cutoff() + r2.cutoff());

  PureState::AmplitudeMap amps;
  for (const auto& [occ1, amp1] : s1.amplitudes()) {
    for (const auto& [occ2, amp2] : s2.amplitudes()) {
      Occupation occ = occ1;
      occ.insert(occ.end(), occ2.begin(), occ2.end());
      amps.emplace(std::move(occ), amp1 * amp2);
    }
  }
  return PureState(std::move(combined), std::move(amps));
}

Complex inner_product(const PureState& s1, const PureState& s2) {
  if (!s1.mode_register().same_modes(s2.mode_register())) {
    throw std::invalid_argument("inner_product: register mismatch");
  }
  Complex result{0.0, 0.0};
  for (const auto& [occ, amp] : s1.amplitudes()) {
    result += std::conj(amp) * s2.amplitude(occ);
  }
  return result;
}

double fidelity(const PureState& s1, const PureState& s2) {
  return std::norm(inner_product(s1, s2));
}

PureState renamed(const PureState& state, std::string_view old_label,
                  std::string_view new_label) {
  const ModeRegister& reg = state.mode_register();
  int idx = reg.require_index(old_label);
  if (new_label != old_label && reg.contains(new_label)) {
    throw std::invalid_argument("rename: label '" + std::string(new_label) +
                                "' already in register");
  }
  std::vector<std::string> labels = reg.labels();
  labels[idx] = std::string(new_label);
  return PureState(ModeRegister(std::move(labels), reg.cutoff()),
                   state.amplitudes());
}

PureState reordered(const PureState& state,
                    const std::vector<std::string>& new_order) {
  const ModeRegister& reg = state.mode_register();
  if (static_cast<int>(new_order.size()) != reg.size()) {
    throw std::invalid_argument("reorder: label count mismatch");
  }
  std::vector<int> source(new_order.size());
  for (std::size_t i = 0; i < new_order.size(); ++i) {
    source[i] = reg.require_index(new_order[i]);
  }
  std::vector<int> check = source;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) {
      throw std::invalid_argument("reorder: labels are not a permutation");
    }
  }
  PureState::AmplitudeMap amps;
  for (const auto& [occ, amp] : state.amplitudes()) {
    Occupation permuted(occ.size());
    for (std::size_t i = 0; i < occ.size(); ++i) {
      permuted[i] = occ[source[i]];
    }
    amps.emplace(std::move(permuted), amp);
  }
  return PureState(ModeRegister(new_order, reg.cutoff()), std::move(amps));
}

}  // namespace singlerail
