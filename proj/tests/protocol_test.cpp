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

#include "densecode/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

namespace densecode {
namespace {

using testing::Mat;
using testing::Vec;

// Index of the reference basis state the vector equals up to phase.
int which_state(const Vec& v, int count, Vec (*reference)(int)) {
  for (int i = 1; i <= count; ++i)
    if (testing::overlap2(reference(i), v) > 1.0 - 1e-12) return i;
  return 0;
}

const std::array<Mat, 4> kPaulis{testing::identity(2), testing::pauli_x2(), testing::pauli_y2(),
                                 testing::pauli_z2()};

// Exact success probability of ghz3 under the Pauli channel, enumerating
// all 16 error patterns on the two transmitted qubits for every message.
double exact_ghz_success(double p) {
  const std::array<double, 4> weight{1.0 - p, p / 3, p / 3, p / 3};
  double total = 0.0;
  for (int m = 1; m <= 8; ++m)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        Vec s = testing::ghz_reference(m);
        s = testing::matvec(testing::full_operator(kPaulis[a], {1}, 3), s);
        s = testing::matvec(testing::full_operator(kPaulis[b], {2}, 3), s);
        if (which_state(s, 8, testing::ghz_reference) == m) total += weight[a] * weight[b] / 8.0;
      }
  return total;
}

double exact_bell_success(double p) {
  const std::array<double, 4> weight{1.0 - p, p / 3, p / 3, p / 3};
  double total = 0.0;
  for (int m = 1; m <= 4; ++m)
    for (std::size_t a = 0; a < 4; ++a) {
      const Vec s = testing::matvec(testing::full_operator(kPaulis[a], {1}, 2), testing::bell_reference(m));
      if (which_state(s, 4, testing::bell_reference) == m) total += weight[a] / 4.0;
    }
  return total;
}

TEST(Oracle, ExactRatesAtFullNoise) {
  // Only Z1 Z2 leaves every GHZ state fixed: 1 of 9 error pairs.
  EXPECT_NEAR(exact_ghz_success(1.0), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(exact_bell_success(1.0), 0.0, 1e-15);
  EXPECT_NEAR(exact_ghz_success(0.0), 1.0, 1e-15);
}

TEST(RoundtripGhz, NoiselessIsExact) {
  for (int m = 1; m <= 8; ++m) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const auto r = roundtrip_ghz(m, ChannelConfig{0.0, seed});
      EXPECT_EQ(r.decoded, m);
      EXPECT_TRUE(r.success);
    }
  }
}

TEST(RoundtripGhz, ForcedXOnQubitOne) {
  // Reference: (X x I x I) psi_3 = psi_1.
  const Vec flipped = testing::matvec(testing::full_operator(testing::pauli_x2(), {1}, 3),
                                      testing::ghz_reference(3));
  ASSERT_EQ(which_state(flipped, 8, testing::ghz_reference), 1);
  const auto r = roundtrip_ghz(3, {Pauli::x, Pauli::i});
  EXPECT_EQ(r.decoded, 1);
  EXPECT_FALSE(r.success);
}

TEST(RoundtripGhz, ZOnQubitOneFlipsSignPartner) {
  for (int m = 1; m <= 8; ++m) {
    const int partner = m % 2 == 1 ? m + 1 : m - 1;
    EXPECT_EQ(roundtrip_ghz(m, {Pauli::z, Pauli::i}).decoded, partner) << m;
  }
}

TEST(RoundtripGhz, EveryForcedPatternMatchesReference) {
  const std::array<Pauli, 4> all{Pauli::i, Pauli::x, Pauli::y, Pauli::z};
  for (int m = 1; m <= 8; ++m)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        Vec s = testing::ghz_reference(m);
        s = testing::matvec(testing::full_operator(kPaulis[a], {1}, 3), s);
        s = testing::matvec(testing::full_operator(kPaulis[b], {2}, 3), s);
        EXPECT_EQ(roundtrip_ghz(m, {all[a], all[b]}).decoded, which_state(s, 8, testing::ghz_reference));
      }
}

TEST(RoundtripBell, Examples) {
  for (int m = 1; m <= 4; ++m) {
    const auto r = roundtrip_bell(m, ChannelConfig{});
    EXPECT_EQ(r.decoded, m);
    EXPECT_TRUE(r.success);
  }
  EXPECT_EQ(roundtrip_bell(1, Pauli::x).decoded, 3);
  EXPECT_EQ(roundtrip_bell(1, Pauli::z).decoded, 2);
  EXPECT_EQ(message_bits(Protocol::bell2, 1), "00");
  EXPECT_EQ(message_bits(Protocol::bell2, 2), "10");
  EXPECT_EQ(message_bits(Protocol::bell2, 3), "01");
  EXPECT_EQ(message_bits(Protocol::bell2, 4), "11");
}

TEST(Roundtrip, Errors) {
  EXPECT_THROW(roundtrip_ghz(0, ChannelConfig{}), std::out_of_range);
  EXPECT_THROW(roundtrip_ghz(9, {Pauli::i, Pauli::i}), std::out_of_range);
  EXPECT_THROW(roundtrip_bell(5, ChannelConfig{}), std::out_of_range);
  EXPECT_THROW(roundtrip_ghz(1, ChannelConfig{1.5, 0}), std::invalid_argument);
  EXPECT_THROW(roundtrip_ghz(1, ChannelConfig{-0.1, 0}), std::invalid_argument);
  EXPECT_THROW(run_trials(Protocol::ghz3, 0, ChannelConfig{}), std::invalid_argument);
  EXPECT_THROW(run_trials(Protocol::bell2, 10, ChannelConfig{}, MessageDistribution::fixed(5)),
               std::out_of_range);
}

TEST(RunTrials, Noiseless) {
  const auto g = run_trials(Protocol::ghz3, 1000, ChannelConfig{0.0, 0});
  EXPECT_EQ(g.successes, 1000);
  EXPECT_EQ(g.success_rate, 1.0);
  EXPECT_EQ(g.bits_per_transmitted_qubit, 1.5);
  EXPECT_EQ(g.messages_histogram.size(), 8u);
  const auto b = run_trials(Protocol::bell2, 1000, ChannelConfig{0.0, 0});
  EXPECT_EQ(b.success_rate, 1.0);
  EXPECT_EQ(b.bits_per_transmitted_qubit, 2.0);
  EXPECT_EQ(b.messages_histogram.size(), 4u);
}

TEST(RunTrials, HistogramAndInvariants) {
  const auto r = run_trials(Protocol::ghz3, 8000, ChannelConfig{0.2, 4});
  std::int64_t sum = 0;
  for (auto c : r.messages_histogram) {
    sum += c;
    EXPECT_NEAR(c / 8000.0, 0.125, 5 * std::sqrt(0.125 * 0.875 / 8000));
  }
  EXPECT_EQ(sum, r.trials);
  EXPECT_LE(r.successes, r.trials);
  EXPECT_EQ(r.success_rate, static_cast<double>(r.successes) / r.trials);
  EXPECT_EQ(r.seed, 4u);

  const auto fixed = run_trials(Protocol::ghz3, 100, ChannelConfig{}, MessageDistribution::fixed(6));
  EXPECT_EQ(fixed.messages_histogram[5], 100);
  EXPECT_EQ(fixed.successes, 100);
}

TEST(RunTrials, SeedReproducibleAcrossThreadCounts) {
  const ChannelConfig ch{0.25, 1234};
  const auto one = run_trials(Protocol::ghz3, 5000, ch, MessageDistribution::uniform(), 1);
  const auto again = run_trials(Protocol::ghz3, 5000, ch, MessageDistribution::uniform(), 1);
  const auto many = run_trials(Protocol::ghz3, 5000, ch, MessageDistribution::uniform(), 7);
  EXPECT_EQ(one, again);
  EXPECT_EQ(one, many);
  EXPECT_NE(one, run_trials(Protocol::ghz3, 5000, ChannelConfig{0.25, 1235}));
}

TEST(RunTrials, MonteCarloMatchesExactEnumeration) {
  const int trials = 20000;
  for (double p : {0.1, 0.3, 1.0}) {
    const double expected = exact_ghz_success(p);
    const double sigma = std::sqrt(expected * (1 - expected) / trials);
    const auto r = run_trials(Protocol::ghz3, trials, ChannelConfig{p, 42}, MessageDistribution::uniform(), 4);
    EXPECT_NEAR(r.success_rate, expected, 5 * sigma) << "p=" << p;

    const double expected_bell = exact_bell_success(p);
    const double sigma_bell = std::sqrt(expected_bell * (1 - expected_bell) / trials);
    const auto rb = run_trials(Protocol::bell2, trials, ChannelConfig{p, 42});
    EXPECT_NEAR(rb.success_rate, expected_bell, 5 * sigma_bell + 1e-12) << "p=" << p;
  }
}

TEST(RunTrials, SuccessRateNonIncreasingInNoise) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto low = run_trials(Protocol::ghz3, 10000, ChannelConfig{0.1, seed});
    const auto high = run_trials(Protocol::ghz3, 10000, ChannelConfig{0.3, seed});
    EXPECT_LE(high.success_rate, low.success_rate);
  }
}

TEST(Capacity, Summary) {
  const auto rows = capacity_summary();
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].protocol, Protocol::ghz3);
  EXPECT_EQ(rows[0].message_count, 8);
  EXPECT_EQ(rows[0].qubits_transmitted, 2);
  EXPECT_EQ(rows[0].total_bits, 3);
  EXPECT_EQ(rows[0].bits_per_qubit, 1.5);
  EXPECT_EQ(rows[1].protocol, Protocol::bell2);
  EXPECT_EQ(rows[1].message_count, 4);
  EXPECT_EQ(rows[1].qubits_transmitted, 1);
  EXPECT_EQ(rows[1].total_bits, 2);
  EXPECT_EQ(rows[1].bits_per_qubit, 2.0);
  EXPECT_EQ(std::log2(8.0) / 2, 1.5);
}

TEST(Protocol, Names) {
  EXPECT_EQ(parse_protocol("ghz3"), Protocol::ghz3);
  EXPECT_EQ(parse_protocol("bell2"), Protocol::bell2);
  EXPECT_THROW(parse_protocol("ghz4"), std::invalid_argument);
  EXPECT_EQ(message_bits(Protocol::ghz3, 3), "011");
  EXPECT_EQ(to_char(Pauli::y), 'Y');
}

}  // namespace
}  // namespace densecode
