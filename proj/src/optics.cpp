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

#include "singlerail/optics.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace singlerail {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

Complex ipow(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

BeamSplitterParams::BeamSplitterParams(Complex t_in, Complex r_in)
    : t(t_in), r(r_in) {
  double total = std::norm(t) + std::norm(r);
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument(
        "beam splitter parameters must satisfy |t|^2 + |r|^2 = 1");
  }
}

BeamSplitterParams BeamSplitterParams::balanced() {
  return BeamSplitterParams(Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0});
}

double PhaseShift::canonical() const {
  double wrapped = std::remainder(phi, 2.0 * std::numbers::pi);
  if (wrapped <= -std::numbers::pi) wrapped += 2.0 * std::numbers::pi;
  return wrapped;
}

Eigen::Matrix2cd beam_splitter_matrix(const BeamSplitterParams& params) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  m << i * params.r, params.t, params.t, i * params.r;
  return m;
}

Eigen::Matrix2cd compensated_splitter_matrix() {
  Eigen::Matrix2cd m;
  m << Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0},
      Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0};
  return m;
}

PureState apply_phase_shifter(const PureState& state, std::string_view mode,
                              PhaseShift shift) {
  if (!std::isfinite(shift.phi)) {
    throw std::invalid_argument("phase shift must be finite");
  }
  int idx = state.mode_register().require_index(mode);
  PureState::AmplitudeMap amps;
  for (const auto& [occ, amp] : state.amplitudes()) {
    Complex factor = std::polar(1.0, shift.phi * occ[idx]);
    amps.emplace(occ, amp * factor);
  }
  return PureState(state.mode_register(), std::move(amps));
}

PureState apply_two_mode_element(const PureState& state,
                                 std::string_view mode1,
                                 std::string_view mode2,
                                 const Eigen::Matrix2cd& transfer) {
  const ModeRegister& reg = state.mode_register();
  int i1 = reg.require_index(mode1);
  int i2 = reg.require_index(mode2);
  if (i1 == i2) {
    throw std::invalid_argument("two-mode element needs distinct modes");
  }

  const Complex u00 = transfer(0, 0), u10 = transfer(1, 0);
  const Complex u01 = transfer(0, 1), u11 = transfer(1, 1);

  PureState::AmplitudeMap out;
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int m = occ[i1];
    const int n = occ[i2];
    if (m + n == 0) {
      out[occ] += amp;
      continue;
    }
    if (m + n > kMaxPhotonsPerElement) {
      throw std::invalid_argument(
          "two-mode element supports at most " +
          std::to_string(kMaxPhotonsPerElement) + " photons per mode pair");
    }
    // (u00 b1 + u10 b2)^m (u01 b1 + u11 b2)^n acting on vacuum, written as
    // creation operators; the coefficient of b1^p b2^q collects every way
    // of drawing j factors of b1 from the first power and p - j from the
    // second.
    const double in_fact =
        static_cast<double>(factorial(m)) * static_cast<double>(factorial(n));
    for (int p = 0; p <= m + n; ++p) {
      const int q = m + n - p;
      Complex coeff{0.0, 0.0};
      for (int j = std::max(0, p - n); j <= std::min(m, p); ++j) {
        const int k = p - j;
        Complex term = static_cast<double>(binomial(m, j)) *
                       static_cast<double>(binomial(n, k)) * ipow(u00, j) *
                       ipow(u10, m - j) * ipow(u01, k) * ipow(u11, n - k);
        coeff += term;
      }
      if (coeff == Complex{0.0, 0.0}) continue;
      const double out_fact = static_cast<double>(factorial(p)) *
                              static_cast<double>(factorial(q));
      coeff *= std::sqrt(out_fact / in_fact);
      Occupation target = occ;
      target[i1] = p;
      target[i2] = q;
      out[std::move(target)] += amp * coeff;
    }
  }
  return PureState(reg, std::move(out));
}

PureState apply_beam_splitter(const PureState& state,
                              std::string_view mode_in1,
                              std::string_view mode_in2,
                              const BeamSplitterParams& params) {
  return apply_two_mode_element(state, mode_in1, mode_in2,
                                beam_splitter_matrix(params));
}

PureState apply_compensated_splitter(const PureState& state,
                                     std::string_view mode_in1,
                                     std::string_view mode_in2) {
  constexpr double kMinusHalfPi = -std::numbers::pi / 2.0;
  PureState shifted =
      apply_phase_shifter(state, mode_in2, PhaseShift{kMinusHalfPi});
  PureState split = apply_beam_splitter(shifted, mode_in1, mode_in2,
                                        BeamSplitterParams::balanced());
  return apply_phase_shifter(split, mode_in1, PhaseShift{kMinusHalfPi});
}

}  // namespace singlerail
