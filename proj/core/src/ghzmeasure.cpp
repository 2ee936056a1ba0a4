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

#include <stdexcept>

namespace densecode {
namespace {

UnitaryMatrix gate_matrix(const Gate& g) {
  return g.kind == Gate::Kind::cnot ? gates::cnot() : gates::hadamard();
}

QubitSubset gate_qubits(const Gate& g) {
  if (g.kind == Gate::Kind::cnot) return QubitSubset{g.control, g.target};
  return QubitSubset{g.target};
}

void check_register(const Network& network, const StateVector& state) {
  if (state.n_qubits() != network.n_qubits) {
    throw std::invalid_argument("network on " + std::to_string(network.n_qubits) +
                                " qubits given a " + std::to_string(state.n_qubits()) +
                                "-qubit state");
  }
}

BasisMeasurement measure_through(const Network& network, const DecodeTable& table,
                                 const StateVector& state, Rng& rng) {
  const Measurement m = measure_computational(run_network(network, state), rng);
  return {table.decode(m.outcome), m.probability, m.bits};
}

}  // namespace

std::string Gate::describe() const {
  if (kind == Kind::cnot) {
    return "CNOT(control=" + std::to_string(control) + ", target=" + std::to_string(target) + ")";
  }
  return "H(qubit=" + std::to_string(target) + ")";
}

Network ghz_network() {
  return {3, {Gate::cnot(1, 3), Gate::cnot(1, 2), Gate::hadamard(1)}};
}

Network bell_network() { return {2, {Gate::cnot(1, 2), Gate::hadamard(1)}}; }

UnitaryMatrix composite_operator(const Network& network) {
  const std::size_t dim = std::size_t{1} << network.n_qubits;
  // Column c is the network applied to |c>.
  std::vector<Amplitude> entries(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const StateVector out = run_network(network, StateVector::basis(network.n_qubits, c));
    for (std::size_t r = 0; r < dim; ++r) entries[r * dim + c] = out[r];
  }
  return UnitaryMatrix(dim, std::move(entries));
}

StateVector run_network(const Network& network, const StateVector& state) {
  check_register(network, state);
  StateVector s = state;
  for (const auto& g : network.gates) s = apply_on_subset(s, gate_matrix(g), gate_qubits(g));
  return s;
}

StateVector disentangle(const StateVector& state) {
  static const Network network = ghz_network();
  return run_network(network, state);
}

DecodeTable DecodeTable::from_network(const Network& network, const BasisCatalog& catalog) {
  const std::size_t dim = std::size_t{1} << network.n_qubits;
  if (catalog.n_qubits() != network.n_qubits || catalog.size() != dim) {
    throw std::invalid_argument("catalog '" + catalog.name() +
                                "' is not a full basis for the network");
  }
  DecodeTable t;
  t.n_qubits_ = network.n_qubits;
  t.index_of_outcome_.assign(dim, 0);
  t.outcome_of_index_.assign(dim, 0);
  for (int i = 1; i <= static_cast<int>(dim); ++i) {
    const auto p = probabilities(run_network(network, catalog.state(i)));
    std::size_t hit = dim;
    for (std::size_t o = 0; o < dim; ++o)
      if (p[o] >= 1.0 - kTolerance) hit = o;
    if (hit == dim) {
      throw std::logic_error(catalog.name() + " state " + std::to_string(i) +
                             " is not mapped to a single computational outcome");
    }
    if (t.index_of_outcome_[hit] != 0) {
      throw std::logic_error("outcome " + bit_string(hit, network.n_qubits) +
                             " produced by two basis states");
    }
    t.index_of_outcome_[hit] = i;
    t.outcome_of_index_[static_cast<std::size_t>(i - 1)] = hit;
  }
  return t;
}

int DecodeTable::decode(std::string_view outcome) const {
  return index_of_outcome_[parse_bit_string(outcome, n_qubits_)];
}

std::string DecodeTable::outcome_of(int index) const {
  if (index < 1 || index > static_cast<int>(outcome_of_index_.size())) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  return bit_string(outcome_of_index_[static_cast<std::size_t>(index - 1)], n_qubits_);
}

const DecodeTable& ghz_decode_table() {
  static const DecodeTable table =
      DecodeTable::from_network(ghz_network(), BasisCatalog::builtin(BasisName::ghz));
  return table;
}

const DecodeTable& bell_decode_table() {
  static const DecodeTable table =
      DecodeTable::from_network(bell_network(), BasisCatalog::builtin(BasisName::bell));
  return table;
}

int decode(std::string_view outcome) { return ghz_decode_table().decode(outcome); }

BasisMeasurement ghz_measure(const StateVector& state, Rng& rng) {
  static const Network network = ghz_network();
  return measure_through(network, ghz_decode_table(), state, rng);
}

BasisMeasurement ghz_measure(const StateVector& state, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return ghz_measure(state, rng);
}

std::vector<double> ghz_probabilities(const StateVector& state) {
  const auto p = probabilities(disentangle(state));
  std::vector<double> by_index(p.size());
  const auto& table = ghz_decode_table();
  for (std::size_t o = 0; o < p.size(); ++o)
    by_index[static_cast<std::size_t>(table.decode(o) - 1)] = p[o];
  return by_index;
}

BasisMeasurement bell_measure(const StateVector& state, Rng& rng) {
  static const Network network = bell_network();
  return measure_through(network, bell_decode_table(), state, rng);
}

}  // namespace densecode
