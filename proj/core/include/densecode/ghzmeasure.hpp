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

// Receiver-side GHZ-basis measurement. The disentangling network
//
//   CNOT(control 1, target 3), CNOT(control 1, target 2), H(1)
//
// maps (|0jk> + |1 ~j ~k>)/sqrt2 to |0jk> and (|0jk> - |1 ~j ~k>)/sqrt2 to
// |1jk>, so a GHZ-basis measurement becomes three computational ones. The
// two-qubit analogue CNOT(1,2), H(1) measures in the Bell basis.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "densecode/bases.hpp"
#include "densecode/qstate.hpp"

namespace densecode {

struct Gate {
  enum class Kind { cnot, hadamard };
  Kind kind;
  int control;  // unused for hadamard
  int target;

  static Gate cnot(int control, int target) { return {Kind::cnot, control, target}; }
  static Gate hadamard(int qubit) { return {Kind::hadamard, 0, qubit}; }

  std::string describe() const;
  bool operator==(const Gate&) const = default;
};

struct Network {
  int n_qubits;
  std::vector<Gate> gates;  // applied first to last
};

Network ghz_network();
Network bell_network();

/// Product of the gate operators, last gate leftmost.
UnitaryMatrix composite_operator(const Network& network);

/// Applies the gates in order. Throws std::invalid_argument if the state
/// does not have network.n_qubits qubits.
StateVector run_network(const Network& network, const StateVector& state);

/// Runs ghz_network() on a 3-qubit state.
StateVector disentangle(const StateVector& state);

/// Bijection between computational outcomes of a network's output and the
/// 1-based index of the basis state that produced it.
class DecodeTable {
 public:
  /// Runs the network on every catalog state; each must land on a single
  /// computational outcome with probability 1 within kTolerance, and the
  /// outcomes must be distinct. Throws std::logic_error otherwise.
  static DecodeTable from_network(const Network& network, const BasisCatalog& catalog);

  int n_qubits() const noexcept { return n_qubits_; }

  /// Throws std::invalid_argument on a malformed bit string.
  int decode(std::string_view outcome) const;
  int decode(std::size_t outcome) const { return index_of_outcome_.at(outcome); }

  /// Outcome bits produced by basis state `index`.
  std::string outcome_of(int index) const;

 private:
  int n_qubits_ = 0;
  std::vector<int> index_of_outcome_;
  std::vector<std::size_t> outcome_of_index_;
};

const DecodeTable& ghz_decode_table();
const DecodeTable& bell_decode_table();

/// GHZ index for a 3-bit outcome: 000->1, 100->2, 011->3, 111->4, 010->5,
/// 110->6, 001->7, 101->8.
int decode(std::string_view outcome);

struct BasisMeasurement {
  int index;
  double probability;
  std::string outcome;
};

/// Disentangle, sample, decode. Works on any 3-qubit state; index i comes
/// up with probability |<psi_i|state>|^2.
BasisMeasurement ghz_measure(const StateVector& state, std::uint64_t rng_seed);
BasisMeasurement ghz_measure(const StateVector& state, Rng& rng);

/// Probability of each GHZ index 1..8 (element 0 is psi_1).
std::vector<double> ghz_probabilities(const StateVector& state);

/// Bell-basis measurement through bell_network().
BasisMeasurement bell_measure(const StateVector& state, Rng& rng);

}  // namespace densecode
