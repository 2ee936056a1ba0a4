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

#pragma once

// End-to-end dense-coding round trips over an optional Pauli channel.
//
// ghz3: the parties share psi_1; the sender encodes one of 8 messages on
// qubits (1,2) and transmits both, the receiver measures in the GHZ basis.
// bell2: the parties share Phi+; the sender encodes one of 4 messages on
// qubit 1 and transmits it, the receiver measures in the Bell basis.
//
// Message j is the basis state with index j. Its classical bits are the
// outcome bits the receiver's network produces for that state, e.g. ghz3
// message 3 carries "011". This labeling is a convention of this library.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "densecode/qstate.hpp"

namespace densecode {

enum class Protocol { ghz3, bell2 };

std::string_view to_string(Protocol protocol);
Protocol parse_protocol(std::string_view text);

int message_count(Protocol protocol);
int qubits_transmitted(Protocol protocol);
double bits_per_transmitted_qubit(Protocol protocol);

/// Classical bits carried by `message` (see the header comment).
std::string message_bits(Protocol protocol, int message);

enum class Pauli { i, x, y, z };

UnitaryMatrix pauli_matrix(Pauli p);
char to_char(Pauli p);

/// Each transmitted qubit independently suffers X, Y or Z, each with
/// probability pauli_error_prob / 3.
struct ChannelConfig {
  double pauli_error_prob = 0.0;
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument unless 0 <= p <= 1.
  void validate() const;
};

struct RoundTrip {
  int decoded;
  bool success;
};

/// Random channel drawn from `channel`.
RoundTrip roundtrip_ghz(int message, const ChannelConfig& channel);
/// Fixed errors on transmitted qubits 1 and 2.
RoundTrip roundtrip_ghz(int message, const std::array<Pauli, 2>& errors,
                        std::uint64_t measurement_seed = 0);

RoundTrip roundtrip_bell(int message, const ChannelConfig& channel);
/// Fixed error on transmitted qubit 1.
RoundTrip roundtrip_bell(int message, Pauli error, std::uint64_t measurement_seed = 0);

struct MessageDistribution {
  std::optional<int> fixed_message;  // uniform when empty

  static MessageDistribution uniform() { return {}; }
  static MessageDistribution fixed(int m) { return {m}; }
};

struct TrialReport {
  Protocol protocol = Protocol::ghz3;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double success_rate = 0.0;
  std::vector<std::int64_t> messages_histogram;  // [message - 1]
  double bits_per_transmitted_qubit = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const TrialReport&) const = default;
};

/// Trial t draws everything (message, channel errors, measurement) from the
/// stream derive_seed(channel.rng_seed, t). Trials are split across
/// `threads` workers; the report is identical for any thread count.
/// Throws std::invalid_argument for trials < 1 or a bad message.
TrialReport run_trials(Protocol protocol, std::int64_t trials, const ChannelConfig& channel,
                       MessageDistribution distribution = MessageDistribution::uniform(),
                       unsigned threads = 1);

struct CapacityRow {
  Protocol protocol;
  int message_count;
  int qubits_transmitted;
  int total_bits;
  double bits_per_qubit;
};

std::vector<CapacityRow> capacity_summary();

}  // namespace densecode
