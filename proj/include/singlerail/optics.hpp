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

#include <Eigen/Core>
#include <string_view>

#include "singlerail/fock.hpp"

namespace singlerail {

// Largest photon total per element application for which the multinomial
// coefficients stay exact in 64-bit integer arithmetic.
inline constexpr int kMaxPhotonsPerElement = 20;

// Lossless beam splitter amplitudes. |t|^2 + |r|^2 = 1 is enforced at
// construction (within kNormTolerance). The element built from these
// parameters is unitary when t and r share a common phase up to pi,
// i.e. Im(t * conj(r)) = 0; the norm constraint alone is checked here.
struct BeamSplitterParams {
  Complex t;
  Complex r;

  BeamSplitterParams(Complex t_in, Complex r_in);

  // t = r = 1/sqrt(2).
  static BeamSplitterParams balanced();
};

// Phase in radians. Applied as-is; canonical() wraps into (-pi, pi] for
// reporting only and must never be called before applying the shift.
struct PhaseShift {
  double phi = 0.0;
  double canonical() const;
};

// Single-photon transfer matrix of the bare beam splitter, column j holding
// the output amplitudes of a photon entering port j. The reflected wave
// leads the transmitted wave by pi/2, hence the factor i on r:
//
//   [ i*r   t  ]
//   [  t   i*r ]
Eigen::Matrix2cd beam_splitter_matrix(const BeamSplitterParams& params);

// Single-photon transfer matrix of the compensated splitter (see
// apply_compensated_splitter): the real rotation
//
//   [ 1/sqrt2  -1/sqrt2 ]
//   [ 1/sqrt2   1/sqrt2 ]
Eigen::Matrix2cd compensated_splitter_matrix();

// Multiplies every basis amplitude by exp(i * phi * n) where n is the
// photon count in `mode`. Unitary.
PureState apply_phase_shifter(const PureState& state, std::string_view mode,
                              PhaseShift shift);

// Generic two-mode linear element. `transfer` is the single-photon matrix
// in the (mode1, mode2) basis, column-by-input-port as above; the creation
// operator of mode j maps to sum_k transfer(k, j) * (creation of mode k).
// Fock-space action is computed by multinomial expansion of the
// substituted operator products with exact integer binomials. Output
// modes reuse the input labels. Photon-number conserving; unitary whenever
// `transfer` is.
PureState apply_two_mode_element(const PureState& state,
                                 std::string_view mode1,
                                 std::string_view mode2,
                                 const Eigen::Matrix2cd& transfer);

// Bare beam splitter on (mode_in1, mode_in2) with the matrix above.
PureState apply_beam_splitter(const PureState& state,
                              std::string_view mode_in1,
                              std::string_view mode_in2,
                              const BeamSplitterParams& params);

// Balanced beam splitter with a -pi/2 phase shifter on the second input
// port and another on the first output port. The shifters cancel the pi/2
// phase picked up on reflection, so a single photon entering the first
// port leaves in the equal superposition (|1,0> + |0,1>)/sqrt(2) and one
// entering the second port leaves in (-|1,0> + |0,1>)/sqrt(2).
PureState apply_compensated_splitter(const PureState& state,
                                     std::string_view mode_in1,
                                     std::string_view mode_in2);

}  // namespace singlerail
