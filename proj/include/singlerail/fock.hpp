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

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlerail {

using Complex = std::complex<double>;

// Photon count per mode, ordered as the register's labels.
using Occupation = std::vector<int>;

// Stored amplitudes smaller than this are pruned so that cancellation
// residue does not accumulate spurious basis states.
inline constexpr double kAmplitudeEpsilon = 1e-14;

// Tolerance for unit-norm and unitarity checks throughout the library.
inline constexpr double kNormTolerance = 1e-12;

// Two photons in flight suffice for every protocol shipped here; callers
// may pick any larger cutoff.
inline constexpr int kDefaultCutoff = 2;

// An ordered set of optical modes with a bound on the total photon number.
// Labels are unique short strings ("A", "B", ...) and their order is fixed
// for the lifetime of every state built on the register.
class ModeRegister {
 public:
  ModeRegister() = default;
  explicit ModeRegister(std::vector<std::string> labels,
                        int cutoff = kDefaultCutoff);

  int size() const { return static_cast<int>(labels_.size()); }
  int cutoff() const { return cutoff_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  // Position of `label`, or -1 when absent.
  int index_of(std::string_view label) const;
  // Position of `label`; throws std::invalid_argument when absent.
  int require_index(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label) >= 0; }

  // True when both registers carry the same labels in the same order.
  // The cutoff is a storage bound, not physics, so overlap-style
  // operations only require matching modes.
  bool same_modes(const ModeRegister& other) const {
    return labels_ == other.labels_;
  }

  bool operator==(const ModeRegister& other) const = default;

 private:
  std::vector<std::string> labels_;
  int cutoff_ = kDefaultCutoff;
};

// A pure multi-mode Fock state held as a sparse map from occupation
// vectors to complex amplitudes. Every operation returns a new state;
// existing states are never mutated, so they are safe to share across
// threads.
class PureState {
 public:
  using AmplitudeMap = std::map<Occupation, Complex>;

  // Validates every occupation against the register (length, non-negative
  // counts, total within cutoff) and prunes near-zero amplitudes. Does not
  // normalize; see normalized().
  PureState(ModeRegister reg, AmplitudeMap amplitudes);

  const ModeRegister& mode_register() const { return register_; }
  const AmplitudeMap& amplitudes() const { return amps_; }
  std::size_t term_count() const { return amps_.size(); }

  // Amplitude of one basis vector; zero when the entry is absent.
  Complex amplitude(const Occupation& occ) const;

  double squared_norm() const;
  double norm() const;

  // Unit-norm copy. Throws std::invalid_argument on the zero vector.
  PureState normalized() const;

 private:
  ModeRegister register_;
  AmplitudeMap amps_;
};

// |occupations> with amplitude one.
PureState basis_state(const ModeRegister& reg, const Occupation& occupations);

// Normalized linear combination sum_i coeff_i * state_i. All states must
// share one register (same modes). Throws when the combination cancels to
// the zero vector.
PureState superpose(
    const std::vector<std::pair<Complex, PureState>>& terms);

// Product state on the concatenated register. Labels must be disjoint; the
// combined cutoff is the sum of the two cutoffs.
PureState tensor(const PureState& s1, const PureState& s2);

// <s1|s2> with conjugation on s1. Requires matching modes.
Complex inner_product(const PureState& s1, const PureState& s2);

// |<s1|s2>|^2 -- invariant under a global phase of either argument.
double fidelity(const PureState& s1, const PureState& s2);

// Copy of `state` with one mode label replaced. The new label must not
// collide with any other label in the register.
PureState renamed(const PureState& state, std::string_view old_label,
                  std::string_view new_label);

// Copy of `state` with its modes permuted into `new_order`, which must be
// a permutation of the current labels.
PureState reordered(const PureState& state,
                    const std::vector<std::string>& new_order);

}  // namespace singlerail
