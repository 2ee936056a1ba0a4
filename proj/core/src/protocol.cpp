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

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "densecode/bases.hpp"
#include "densecode/encoding.hpp"
#include "densecode/ghzmeasure.hpp"

namespace densecode {
namespace {

void check_message(Protocol protocol, int message) {
  const int count = message_count(protocol);
  if (message < 1 || message > count) {
    throw std::out_of_range(std::string(to_string(protocol)) + " message " +
                            std::to_string(message) + " outside 1.." + std::to_string(count));
  }
}

Pauli draw_error(double p, Rng& rng) {
  if (uniform01(rng) >= p) return Pauli::i;
  static constexpr std::array<Pauli, 3> kErrors{Pauli::x, Pauli::y, Pauli::z};
  // 3 * u in [0, 3) picks each error with probability 1/3.
  const auto k = std::min<std::size_t>(2, static_cast<std::size_t>(3.0 * uniform01(rng)));
  return kErrors[k];
}

StateVector with_error(const StateVector& s, Pauli error, int qubit) {
  if (error == Pauli::i) return s;
  return apply_on_subset(s, pauli_matrix(error), QubitSubset{qubit});
}

RoundTrip ghz_chain(int message, const std::array<Pauli, 2>& errors, Rng& rng) {
  static const StateVector shared = ghz_state(1);
  StateVector s = encode(message, shared);
  s = with_error(s, errors[0], 1);
  s = with_error(s, errors[1], 2);
  const int decoded = ghz_measure(s, rng).index;
  return {decoded, decoded == message};
}

RoundTrip bell_chain(int message, Pauli error, Rng& rng) {
  static const StateVector shared = bell_state(1);
  StateVector s = with_error(bell_encode(message, shared), error, 1);
  const int decoded = bell_measure(s, rng).index;
  return {decoded, decoded == message};
}

RoundTrip noisy_trial(Protocol protocol, int message, double p, Rng& rng) {
  if (protocol == Protocol::ghz3) {
    const Pauli e1 = draw_error(p, rng);
    const Pauli e2 = draw_error(p, rng);
    return ghz_chain(message, {e1, e2}, rng);
  }
  const Pauli e = draw_error(p, rng);
  return bell_chain(message, e, rng);
}

}  // namespace

std::string_view to_string(Protocol protocol) {
  return protocol == Protocol::ghz3 ? "ghz3" : "bell2";
}

Protocol parse_protocol(std::string_view text) {
  if (text == "ghz3") return Protocol::ghz3;
  if (text == "bell2") return Protocol::bell2;
  throw std::invalid_argument("unknown protocol '" + std::string(text) + "'");
}

int message_count(Protocol protocol) { return protocol == Protocol::ghz3 ? 8 : 4; }

int qubits_transmitted(Protocol protocol) { return protocol == Protocol::ghz3 ? 2 : 1; }

double bits_per_transmitted_qubit(Protocol protocol) {
  return std::log2(static_cast<double>(message_count(protocol))) / qubits_transmitted(protocol);
}

std::string message_bits(Protocol protocol, int message) {
  check_message(protocol, message);
  return protocol == Protocol::ghz3 ? ghz_decode_table().outcome_of(message)
                                    : bell_decode_table().outcome_of(message);
}

UnitaryMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::i: return UnitaryMatrix::identity(2);
    case Pauli::x: return gates::pauli_x();
    case Pauli::y: return gates::pauli_y();
    case Pauli::z: return gates::pauli_z();
  }
  throw std::invalid_argument("bad Pauli");
}

char to_char(Pauli p) {
  switch (p) {
    case Pauli::i: return 'I';
    case Pauli::x: return 'X';
    case Pauli::y: return 'Y';
    case Pauli::z: return 'Z';
  }
  return '?';
}

void ChannelConfig::validate() const {
  if (!(pauli_error_prob >= 0.0 && pauli_error_prob <= 1.0)) {
    throw std::invalid_argument("Pauli error probability must lie in [0, 1]");
  }
}

RoundTrip roundtrip_ghz(int message, const ChannelConfig& channel) {
  channel.validate();
  check_message(Protocol::ghz3, message);
  Rng rng(channel.rng_seed);
  return noisy_trial(Protocol::ghz3, message, channel.pauli_error_prob, rng);
}

RoundTrip roundtrip_ghz(int message, const std::array<Pauli, 2>& errors,
                        std::uint64_t measurement_seed) {
  check_message(Protocol::ghz3, message);
  Rng rng(measurement_seed);
  return ghz_chain(message, errors, rng);
}

RoundTrip roundtrip_bell(int message, const ChannelConfig& channel) {
  channel.validate();
  check_message(Protocol::bell2, message);
  Rng rng(channel.rng_seed);
  return noisy_trial(Protocol::bell2, message, channel.pauli_error_prob, rng);
}

RoundTrip roundtrip_bell(int message, Pauli error, std::uint64_t measurement_seed) {
  check_message(Protocol::bell2, message);
  Rng rng(measurement_seed);
  return bell_chain(message, error, rng);
}

TrialReport run_trials(Protocol protocol, std::int64_t trials, const ChannelConfig& channel,
                       MessageDistribution distribution, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  channel.validate();
  if (distribution.fixed_message) check_message(protocol, *distribution.fixed_message);

  const int count = message_count(protocol);
  struct Tally {
    std::int64_t successes = 0;
    std::vector<std::int64_t> histogram;
  };
  auto run_range = [&](std::int64_t begin, std::int64_t end, Tally& tally) {
    tally.histogram.assign(static_cast<std::size_t>(count), 0);
    for (std::int64_t t = begin; t < end; ++t) {
      Rng rng(derive_seed(channel.rng_seed, static_cast<std::uint64_t>(t)));
      // count is a power of two, so the modulus is unbiased.
      const int message = distribution.fixed_message
                              ? *distribution.fixed_message
                              : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(count));
      tally.histogram[static_cast<std::size_t>(message - 1)] += 1;
      if (noisy_trial(protocol, message, channel.pauli_error_prob, rng).success) ++tally.successes;
    }
  };

  const auto workers = static_cast<std::int64_t>(
      std::clamp<std::int64_t>(threads == 0 ? 1 : threads, 1, trials));
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t begin = trials * w / workers;
      const std::int64_t end = trials * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end, std::ref(tallies[static_cast<std::size_t>(w)]));
    }
  }

  TrialReport report;
  report.protocol = protocol;
  report.trials = trials;
  report.messages_histogram.assign(static_cast<std::size_t>(count), 0);
  for (const auto& t : tallies) {
    report.successes += t.successes;
    for (std::size_t m = 0; m < t.histogram.size(); ++m) report.messages_histogram[m] += t.histogram[m];
  }
  report.success_rate = static_cast<double>(report.successes) / static_cast<double>(trials);
  report.bits_per_transmitted_qubit = bits_per_transmitted_qubit(protocol);
  report.seed = channel.rng_seed;
  return report;
}

std::vector<CapacityRow> capacity_summary() {
  std::vector<CapacityRow> rows;
  for (Protocol p : {Protocol::ghz3, Protocol::bell2}) {
    const int count = message_count(p);
    rows.push_back({p, count, qubits_transmitted(p),
                    static_cast<int>(std::bit_width(static_cast<unsigned>(count))) - 1,
                    bits_per_transmitted_qubit(p)});
  }
  return rows;
}

}  // namespace densecode
