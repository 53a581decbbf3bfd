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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "singlerail/fock.hpp"
#include "singlerail/serialize.hpp"
#include "test_support.hpp"

using namespace singlerail;
using singlerail::testing::kInvSqrt2;

namespace {

ModeRegister pair_register() { return ModeRegister({"I", "J"}, 2); }

PureState psi_plus(const ModeRegister& reg) {
  return superpose({{kInvSqrt2, basis_state(reg, {0, 1})},
                    {kInvSqrt2, basis_state(reg, {1, 0})}});
}

PureState psi_minus(const ModeRegister& reg) {
  return superpose({{kInvSqrt2, basis_state(reg, {0, 1})},
                    {-kInvSqrt2, basis_state(reg, {1, 0})}});
}

}  // namespace

TEST_SUITE_BEGIN("fock");

TEST_CASE("mode register rejects duplicates and empty labels") {
  CHECK_THROWS_AS(ModeRegister({"A", "A"}), std::invalid_argument);
  CHECK_THROWS_AS(ModeRegister({""}), std::invalid_argument);
  CHECK_THROWS_AS(ModeRegister({"A"}, -1), std::invalid_argument);
  ModeRegister reg({"A", "B", "C"}, 3);
  CHECK(reg.require_index("C") == 2);
  CHECK(reg.index_of("X") == -1);
  CHECK_THROWS_AS(reg.require_index("X"), std::invalid_argument);
}

TEST_CASE("basis_state puts amplitude one on the requested vector") {
  ModeRegister reg = pair_register();
  PureState one_zero = basis_state(reg, {1, 0});
  CHECK(one_zero.amplitude({1, 0}) == Complex{1.0, 0.0});
  CHECK(one_zero.term_count() == 1);

  PureState vacuum = basis_state(reg, {0, 0});
  CHECK(vacuum.amplitude({0, 0}) == Complex{1.0, 0.0});
}

TEST_CASE("basis_state rejects malformed occupations") {
  CHECK_THROWS_AS(basis_state(ModeRegister({"A", "B", "C"}, 2), {0, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(basis_state(pair_register(), {1, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(basis_state(pair_register(), {-1, 1}),
                  std::invalid_argument);
}

TEST_CASE("superpose builds the symmetric Bell state") {
  PureState state = psi_plus(pair_register());
  CHECK(state.amplitude({0, 1}).real() == doctest::Approx(kInvSqrt2));
  CHECK(state.amplitude({1, 0}).real() == doctest::Approx(kInvSqrt2));
  CHECK(std::abs(state.squared_norm() - 1.0) < kNormTolerance);
}

TEST_CASE("superpose keeps identity combinations and renormalizes") {
  ModeRegister reg = pair_register();
  PureState state = superpose({{Complex{1.0, 0.0}, basis_state(reg, {1, 0})},
                               {Complex{0.0, 0.0}, basis_state(reg, {0, 1})}});
  CHECK(state.amplitude({1, 0}) == Complex{1.0, 0.0});
  CHECK(state.term_count() == 1);

  PureState scaled = superpose({{Complex{3.0, 0.0}, basis_state(reg, {1, 0})},
                                {Complex{4.0, 0.0}, basis_state(reg, {0, 1})}});
  CHECK(scaled.amplitude({1, 0}).real() == doctest::Approx(0.6));
  CHECK(scaled.amplitude({0, 1}).real() == doctest::Approx(0.8));
}

TEST_CASE("superpose rejects cancellation and register mismatch") {
  ModeRegister reg = pair_register();
  PureState one_zero = basis_state(reg, {1, 0});
  CHECK_THROWS_AS(superpose({{Complex{1.0, 0.0}, one_zero},
                             {Complex{-1.0, 0.0}, one_zero}}),
                  std::invalid_argument);
  PureState other = basis_state(ModeRegister({"A", "B"}, 2), {1, 0});
  CHECK_THROWS_AS(
      superpose({{Complex{1.0, 0.0}, one_zero}, {Complex{1.0, 0.0}, other}}),
      std::invalid_argument);
}

TEST_CASE("tensor distributes over superpositions") {
  ModeRegister ab({"A", "B"}, 2);
  ModeRegister c({"C"}, 1);
  PureState pair = psi_plus(ab);
  PureState photon = basis_state(c, {1});
  PureState product = tensor(pair, photon);
  CHECK(product.amplitude({0, 1, 1}).real() == doctest::Approx(kInvSqrt2));
  CHECK(product.amplitude({1, 0, 1}).real() == doctest::Approx(kInvSqrt2));
  CHECK(product.term_count() == 2);
  CHECK(product.mode_register().labels() ==
        std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("tensor of vacua is the vacuum on the combined register") {
  PureState v1 = basis_state(ModeRegister({"A"}, 1), {0});
  PureState v2 = basis_state(ModeRegister({"B"}, 1), {0});
  PureState product = tensor(v1, v2);
  CHECK(product.amplitude({0, 0}) == Complex{1.0, 0.0});
  CHECK(product.term_count() == 1);
}

TEST_CASE("tensor of the entangled pair with an equal superposition") {
  // Expanding by hand gives four terms, every amplitude 1/2.
  ModeRegister ab({"A", "B"}, 2);
  ModeRegister c({"C"}, 1);
  PureState pair = psi_plus(ab);
  PureState message = superpose({{kInvSqrt2, basis_state(c, {1})},
                                 {kInvSqrt2, basis_state(c, {0})}});
  PureState product = tensor(pair, message);
  CHECK(product.term_count() == 4);
  for (const auto& occ :
       {Occupation{0, 1, 0}, Occupation{0, 1, 1}, Occupation{1, 0, 0},
        Occupation{1, 0, 1}}) {
    CHECK(product.amplitude(occ).real() == doctest::Approx(0.5));
    CHECK(product.amplitude(occ).imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("tensor rejects label collisions") {
  PureState s1 = basis_state(ModeRegister({"A", "B"}, 2), {1, 0});
  PureState s2 = basis_state(ModeRegister({"B"}, 1), {0});
  CHECK_THROWS_AS(tensor(s1, s2), std::invalid_argument);
}

TEST_CASE("inner products of the Bell pair states") {
  ModeRegister reg = pair_register();
  PureState plus = psi_plus(reg);
  PureState minus = psi_minus(reg);
  CHECK(std::abs(inner_product(plus, plus) - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(inner_product(plus, minus)) < 1e-12);
  CHECK(std::abs(inner_product(basis_state(reg, {1, 0}), plus) -
                 Complex{kInvSqrt2, 0.0}) < 1e-12);

  PureState other = basis_state(ModeRegister({"A", "B"}, 2), {1, 0});
  CHECK_THROWS_AS(inner_product(plus, other), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(plus, other), std::invalid_argument);
}

TEST_CASE("inner product conjugates its first argument") {
  ModeRegister reg({"A"}, 1);
  PureState i_photon = superpose({{Complex{0.0, 1.0}, basis_state(reg, {1})}});
  Complex ip = inner_product(i_photon, basis_state(reg, {1}));
  CHECK(ip.real() == doctest::Approx(0.0));
  CHECK(ip.imag() == doctest::Approx(-1.0));
}

TEST_CASE("fidelity endpoints") {
  ModeRegister reg = pair_register();
  PureState plus = psi_plus(reg);
  CHECK(fidelity(plus, plus) == doctest::Approx(1.0));
  CHECK(fidelity(basis_state(reg, {1, 0}), basis_state(reg, {0, 1})) ==
        doctest::Approx(0.0));

  // a|1> - b|0> against a|1> + b|0> with a = b = 1/sqrt(2): orthogonal.
  ModeRegister single({"A"}, 1);
  PureState minus = superpose({{kInvSqrt2, basis_state(single, {1})},
                               {-kInvSqrt2, basis_state(single, {0})}});
  PureState plus1 = superpose({{kInvSqrt2, basis_state(single, {1})},
                               {kInvSqrt2, basis_state(single, {0})}});
  CHECK(fidelity(minus, plus1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fidelity is invariant under a global phase") {
  RandomStream stream(11);
  ModeRegister reg({"A", "B"}, 3);
  for (int i = 0; i < 50; ++i) {
    PureState s1 = singlerail::testing::random_state(reg, stream);
    PureState s2 = singlerail::testing::random_state(reg, stream);
    double theta = stream.next_double() * 6.283185307179586;
    PureState rotated = superpose({{std::polar(1.0, theta), s1}});
    CHECK(std::abs(fidelity(rotated, s2) - fidelity(s1, s2)) < 1e-12);
  }
}

TEST_CASE("self inner product is real and non-negative") {
  RandomStream stream(13);
  ModeRegister reg({"A", "B", "C"}, 2);
  for (int i = 0; i < 50; ++i) {
    PureState s = singlerail::testing::random_state(reg, stream);
    Complex ip = inner_product(s, s);
    CHECK(std::abs(ip.imag()) < 1e-12);
    CHECK(ip.real() >= 0.0);
  }
}

TEST_CASE("normalized rejects the zero vector") {
  PureState zero(pair_register(), {});
  CHECK_THROWS_AS(zero.normalized(), std::invalid_argument);
}

TEST_CASE("renamed swaps one label and keeps amplitudes") {
  PureState state = psi_plus(pair_register());
  PureState renamed_state = renamed(state, "I", "A");
  CHECK(renamed_state.mode_register().labels() ==
        std::vector<std::string>{"A", "J"});
  CHECK(renamed_state.amplitude({0, 1}).real() == doctest::Approx(kInvSqrt2));
  CHECK_THROWS_AS(renamed(state, "X", "Y"), std::invalid_argument);
  CHECK_THROWS_AS(renamed(state, "I", "J"), std::invalid_argument);
}

TEST_CASE("reordered permutes occupations with the labels") {
  ModeRegister reg({"A", "B", "C"}, 2);
  PureState::AmplitudeMap amps;
  amps[{1, 0, 0}] = Complex{0.6, 0.0};
  amps[{0, 0, 1}] = Complex{0.0, 0.8};
  PureState state(reg, std::move(amps));
  PureState shuffled = reordered(state, {"C", "A", "B"});
  CHECK(shuffled.amplitude({0, 1, 0}) == Complex{0.6, 0.0});
  CHECK(shuffled.amplitude({1, 0, 0}) == Complex{0.0, 0.8});
  CHECK_THROWS_AS(reordered(state, {"A", "B", "B"}), std::invalid_argument);
}

TEST_CASE("near-zero amplitudes are pruned on write") {
  ModeRegister reg = pair_register();
  PureState::AmplitudeMap amps;
  amps[{1, 0}] = Complex{1.0, 0.0};
  amps[{0, 1}] = Complex{1e-15, 0.0};
  PureState state(reg, std::move(amps));
  CHECK(state.term_count() == 1);
  CHECK(state.amplitude({0, 1}) == Complex{0.0, 0.0});
}

TEST_CASE("state serialization lists occupations in lexicographic order") {
  ModeRegister reg({"A", "B"}, 2);
  PureState::AmplitudeMap amps;
  amps[{1, 0}] = Complex{kInvSqrt2, 0.0};
  amps[{0, 1}] = Complex{0.0, kInvSqrt2};
  PureState state(reg, std::move(amps));
  Json serialized = state_to_json(state);
  CHECK(serialized["modes"] == Json::array({"A", "B"}));
  const auto& rows = serialized["amplitudes"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["occupations"] == Json::array({0, 1}));
  CHECK(rows[0]["im"].get<double>() == doctest::Approx(kInvSqrt2));
  CHECK(rows[1]["occupations"] == Json::array({1, 0}));
  CHECK(rows[1]["re"].get<double>() == doctest::Approx(kInvSqrt2));
}

TEST_SUITE_END();
