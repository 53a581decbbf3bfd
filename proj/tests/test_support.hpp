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

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "singlerail/fock.hpp"
#include "singlerail/optics.hpp"
#include "singlerail/random.hpp"

namespace singlerail::testing {

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Every occupation vector of `modes` modes with total at most `max_total`,
// in lexicographic order.
inline std::vector<Occupation> enumerate_occupations(int modes,
                                                     int max_total) {
  std::vector<Occupation> all;
  Occupation current(modes, 0);
  auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == modes) {
      all.push_back(current);
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      current[position] = n;
      self(self, position + 1, remaining - n);
    }
    current[position] = 0;
  };
  recurse(recurse, 0, max_total);
  return all;
}

// Random sparse unit-norm state over the full occupation basis of `reg`.
inline PureState random_state(const ModeRegister& reg, RandomStream& stream) {
  auto basis = enumerate_occupations(reg.size(), reg.cutoff());
  PureState::AmplitudeMap amps;
  for (const auto& occ : basis) {
    if (stream.next_double() < 0.5) continue;
    double re = 2.0 * stream.next_double() - 1.0;
    double im = 2.0 * stream.next_double() - 1.0;
    amps[occ] = Complex{re, im};
  }
  if (amps.empty()) {
    amps[basis[static_cast<std::size_t>(stream.next_double() *
                                        static_cast<double>(basis.size()))]] =
        Complex{1.0, 0.0};
  }
  return PureState(reg, std::move(amps)).normalized();
}

// Beam splitter pair from the unitary family: t and r share a phase, so
// the element matrix is exactly unitary.
inline BeamSplitterParams random_unitary_params(RandomStream& stream) {
  double theta = stream.next_double() * std::numbers::pi / 2.0;
  double gamma = stream.next_double() * 2.0 * std::numbers::pi;
  Complex phase = std::polar(1.0, gamma);
  return BeamSplitterParams(phase * std::cos(theta), phase * std::sin(theta));
}

// Fully complex normalized (t, r) pair, independent phases.
inline BeamSplitterParams random_complex_params(RandomStream& stream) {
  double theta = stream.next_double() * std::numbers::pi / 2.0;
  double alpha = stream.next_double() * 2.0 * std::numbers::pi;
  double beta = stream.next_double() * 2.0 * std::numbers::pi;
  return BeamSplitterParams(std::polar(std::cos(theta), alpha),
                            std::polar(std::sin(theta), beta));
}

// ---------------------------------------------------------------------------
// Independent oracle for the two-mode element: expands the substituted
// creation-operator product as a polynomial by iterated multiplication with
// the linear forms, term by term, with no closed-form binomials. Kept apart
// from the library's multinomial route on purpose.

using OperatorPolynomial = std::map<std::pair<int, int>, Complex>;

inline OperatorPolynomial multiply_by_linear(const OperatorPolynomial& poly,
                                             Complex c1, Complex c2) {
  OperatorPolynomial out;
  for (const auto& [powers, coeff] : poly) {
    out[{powers.first + 1, powers.second}] += coeff * c1;
    out[{powers.first, powers.second + 1}] += coeff * c2;
  }
  return out;
}

inline double exact_factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Amplitudes of U|m, n> over two modes, keyed by output occupation.
inline std::map<std::pair<int, int>, Complex> oracle_two_mode_action(
    int m, int n, const Eigen::Matrix2cd& u) {
  OperatorPolynomial poly{{{0, 0}, Complex{1.0, 0.0}}};
  for (int i = 0; i < m; ++i) poly = multiply_by_linear(poly, u(0, 0), u(1, 0));
  for (int i = 0; i < n; ++i) poly = multiply_by_linear(poly, u(0, 1), u(1, 1));

  std::map<std::pair<int, int>, Complex> amplitudes;
  const double input_norm =
      std::sqrt(exact_factorial(m) * exact_factorial(n));
  for (const auto& [powers, coeff] : poly) {
    const auto [p, q] = powers;
    amplitudes[powers] = coeff *
                         std::sqrt(exact_factorial(p) * exact_factorial(q)) /
                         input_norm;
  }
  return amplitudes;
}

// Matrix of the element on the fixed total-photon sector, columns indexed
// by input occupation (k, n - k) for k = 0..n. `apply` maps a two-mode
// basis state to its image.
template <typename Apply>
Eigen::MatrixXcd sector_matrix(int total, Apply&& apply) {
  const int dim = total + 1;
  Eigen::MatrixXcd matrix(dim, dim);
  for (int col = 0; col < dim; ++col) {
    auto image = apply(col, total - col);
    for (int row = 0; row < dim; ++row) {
      auto it = image.find({row, total - row});
      matrix(row, col) = it == image.end() ? Complex{0.0, 0.0} : it->second;
    }
  }
  return matrix;
}

}  // namespace singlerail::testing
