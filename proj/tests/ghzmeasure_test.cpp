// Copyright 2026 The densecode Authors
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

#include "densecode/ghzmeasure.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_util.hpp"

namespace densecode {
namespace {

using testing::to_mat;
using testing::to_vec;

// Outcome the reference disentangler gives for a basis state, or "" if the
// output is not a single computational state.
std::string reference_outcome(const testing::Mat& network, const testing::Vec& in, int n) {
  const auto out = testing::matvec(network, in);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (std::norm(out[i]) > 1.0 - 1e-14) return bit_string(i, n);
  return "";
}

std::string negate(char c) { return c == '0' ? "1" : "0"; }

TEST(Network, GateList) {
  const Network n = ghz_network();
  ASSERT_EQ(n.gates.size(), 3u);
  EXPECT_EQ(n.gates[0], Gate::cnot(1, 3));
  EXPECT_EQ(n.gates[1], Gate::cnot(1, 2));
  EXPECT_EQ(n.gates[2], Gate::hadamard(1));
  EXPECT_EQ(n.gates[0].describe(), "CNOT(control=1, target=3)");
  EXPECT_EQ(n.gates[2].describe(), "H(qubit=1)");
}

TEST(Network, CompositeMatchesReferenceAndIsUnitary) {
  const UnitaryMatrix u = composite_operator(ghz_network());
  EXPECT_LE(unitarity_defect(u.dim(), u.entries()), kTolerance);
  const auto ref = testing::ghz_disentangler_reference();
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(std::abs(u(r, c) - ref[r][c]), 0.0, kTolerance);
}

TEST(Network, CnotOrderIsImmaterial) {
  const Network swapped{3, {Gate::cnot(1, 2), Gate::cnot(1, 3), Gate::hadamard(1)}};
  EXPECT_LE(max_entry_difference(composite_operator(ghz_network()), composite_operator(swapped)),
            kTolerance);
}

TEST(Disentangle, Examples) {
  EXPECT_NEAR(std::abs(disentangle(ghz_state(1))[testing::index_of("000")]), 1.0, kTolerance);
  EXPECT_NEAR(std::abs(disentangle(ghz_state(2))[testing::index_of("100")]), 1.0, kTolerance);
  // Reference: psi_6 = (|010> - |101>)/sqrt2 through the explicit operator.
  const auto ref = testing::ghz_disentangler_reference();
  EXPECT_EQ(reference_outcome(ref, testing::ghz_reference(6), 3), "110");
  EXPECT_NEAR(std::abs(disentangle(ghz_state(6))[testing::index_of("110")]), 1.0, kTolerance);
  EXPECT_THROW(disentangle(bell_state(1)), std::invalid_argument);
}

TEST(Disentangle, MatchesReferenceOnRandomStates) {
  Rng rng(123);
  const auto ref = testing::ghz_disentangler_reference();
  for (int t = 0; t < 20; ++t) {
    const StateVector s = random_state(3, rng);
    EXPECT_LT(testing::max_abs_diff(to_vec(disentangle(s)), testing::matvec(ref, to_vec(s))), kTolerance);
  }
}

TEST(Disentangle, NetworkLawForAllSixteenInstances) {
  const double h = testing::kInvSqrt2;
  for (const char* jk : {"00", "01", "10", "11"}) {
    const std::string plain = std::string("0") + jk;
    const std::string flipped = "1" + negate(jk[0]) + negate(jk[1]);
    for (int sign : {1, -1}) {
      const auto in = testing::to_state(testing::ket(3, {{plain, h}, {flipped, sign * h}}));
      const std::string expected = std::string(sign > 0 ? "0" : "1") + jk;
      const StateVector out = disentangle(in);
      EXPECT_GE(fidelity_up_to_phase(out, StateVector::basis(3, testing::index_of(expected))),
                1.0 - kTolerance)
          << plain << (sign > 0 ? " + " : " - ") << flipped;
    }
  }
}

TEST(DecodeTable, FrozenTableFromReferenceOperator) {
  // Expected table, derived from the explicit operator rather than the
  // library network.
  const auto ref = testing::ghz_disentangler_reference();
  std::map<std::string, int> expected;
  for (int j = 1; j <= 8; ++j) expected[reference_outcome(ref, testing::ghz_reference(j), 3)] = j;
  const std::map<std::string, int> frozen{{"000", 1}, {"100", 2}, {"011", 3}, {"111", 4},
                                          {"010", 5}, {"110", 6}, {"001", 7}, {"101", 8}};
  ASSERT_EQ(expected, frozen);
  for (const auto& [bits, j] : frozen) {
    EXPECT_EQ(decode(bits), j) << bits;
    EXPECT_EQ(ghz_decode_table().outcome_of(j), bits);
  }
}

TEST(DecodeTable, Bijection) {
  std::set<int> seen;
  for (std::size_t o = 0; o < 8; ++o) seen.insert(ghz_decode_table().decode(o));
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(*seen.begin(), 1);
  EXPECT_EQ(*seen.rbegin(), 8);
}

TEST(DecodeTable, BellTableFromReference) {
  const auto ref = testing::matmul(testing::full_operator(testing::hadamard2(), {1}, 2),
                                   testing::full_cnot(1, 2, 2));
  const std::map<std::string, int> frozen{{"00", 1}, {"10", 2}, {"01", 3}, {"11", 4}};
  for (const auto& [bits, m] : frozen) {
    EXPECT_EQ(reference_outcome(ref, testing::bell_reference(m), 2), bits);
    EXPECT_EQ(bell_decode_table().decode(bits), m);
  }
}

TEST(DecodeTable, RejectsMalformedOutcome) {
  EXPECT_THROW(decode("00"), std::invalid_argument);
  EXPECT_THROW(decode("0000"), std::invalid_argument);
  EXPECT_THROW(decode("0x1"), std::invalid_argument);
}

TEST(DecodeTable, RejectsNetworkThatDoesNotDisentangle) {
  const Network no_hadamard{3, {Gate::cnot(1, 3), Gate::cnot(1, 2)}};
  EXPECT_THROW(DecodeTable::from_network(no_hadamard, BasisCatalog::builtin(BasisName::ghz)),
               std::logic_error);
}

TEST(GhzMeasure, Examples) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = ghz_measure(ghz_state(7), seed);
    EXPECT_EQ(m.index, 7);
    EXPECT_NEAR(m.probability, 1.0, kTolerance);
    EXPECT_EQ(m.outcome, "001");
  }
  const double h = testing::kInvSqrt2;
  std::vector<Amplitude> mix(8);
  for (std::size_t i = 0; i < 8; ++i) mix[i] = h * (ghz_state(1)[i] + ghz_state(2)[i]);
  const StateVector superposed(3, mix);
  // (psi1 + psi2)/sqrt2 = |000>.
  EXPECT_GE(fidelity_up_to_phase(superposed, StateVector::basis(3, 0)), 1.0 - kTolerance);
  std::set<int> indices;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto m = ghz_measure(superposed, seed);
    EXPECT_NEAR(m.probability, 0.5, kTolerance);
    indices.insert(m.index);
  }
  EXPECT_EQ(indices, (std::set<int>{1, 2}));
  const auto p = ghz_probabilities(StateVector::basis(3, 0));
  EXPECT_NEAR(p[0], 0.5, kTolerance);
  EXPECT_NEAR(p[1], 0.5, kTolerance);
}

TEST(GhzMeasure, BornRuleOnRandomStates) {
  Rng rng(2001);
  for (int t = 0; t < 100; ++t) {
    const StateVector s = random_state(3, rng);
    const auto p = ghz_probabilities(s);
    for (int i = 1; i <= 8; ++i) {
      const double expected = testing::overlap2(testing::ghz_reference(i), to_vec(s));
      EXPECT_NEAR(p[static_cast<std::size_t>(i - 1)], expected, 1e-10);
    }
  }
}

TEST(GhzMeasure, SampledIndexReportsItsBornProbability) {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const StateVector s = random_state(3, rng);
    const auto m = ghz_measure(s, rng);
    EXPECT_NEAR(m.probability, testing::overlap2(testing::ghz_reference(m.index), to_vec(s)), 1e-10);
  }
}

TEST(BellMeasure, IdentifiesEachBellState) {
  Rng rng(4);
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(bell_measure(bell_state(m), rng).index, m);
}

}  // namespace
}  // namespace densecode
