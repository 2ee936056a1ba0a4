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

// Dense state-vector algebra for small qubit registers.
//
// Qubit ordering: qubit 1 is the most significant bit of a basis-state
// index, so for three qubits |011> has index 3 and |100> has index 4. Every
// module in this library uses that convention.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace densecode {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

/// Tolerance for exact-algebra checks (norms, unitarity, orthonormality).
inline constexpr double kTolerance = 1e-12;

/// Largest register a StateVector will hold.
inline constexpr int kMaxQubits = 20;

/// Normalized pure state of `n_qubits` qubits, stored densely.
class StateVector {
 public:
  /// Throws std::invalid_argument unless the vector has length 2^n_qubits,
  /// every entry is finite, and the L2 norm is 1 within kTolerance.
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(int n_qubits, std::size_t index);

  /// Rescales `amplitudes` to unit norm before validating. Throws on a zero
  /// vector.
  static StateVector normalized(int n_qubits, std::vector<Amplitude> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Amplitude operator[](std::size_t index) const { return amplitudes_.at(index); }
  double norm() const noexcept;

  /// The same state multiplied by a unit-modulus scalar.
  StateVector with_phase(Amplitude phase) const;

 private:
  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Square unitary matrix over 2^k dimensions, row-major.
class UnitaryMatrix {
 public:
  /// Throws std::invalid_argument unless `dim` is a power of two, `entries`
  /// holds dim*dim finite values and U^dagger U = I within kTolerance.
  UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries);

  /// Builds a matrix from nested rows; convenient for transcribing tables.
  static UnitaryMatrix from_rows(
      std::initializer_list<std::initializer_list<Amplitude>> rows);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  int n_qubits() const noexcept;
  Amplitude operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Amplitude> entries() const noexcept { return entries_; }

  UnitaryMatrix adjoint() const;

  /// Matrix product; (*this) acts after `rhs`.
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

  /// Applies the matrix to a whole register of matching dimension.
  StateVector apply(const StateVector& state) const;

 private:
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

/// max_{ij} |(M^dagger M - I)_{ij}| for a row-major dim x dim matrix.
double unitarity_defect(std::size_t dim, std::span<const Amplitude> entries);

/// max_{ij} |A_ij - B_ij|. Throws on a dimension mismatch.
double max_entry_difference(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Ordered, distinct, 1-based qubit positions. The first listed position is
/// driven by the most significant index bit of the operator being embedded.
class QubitSubset {
 public:
  QubitSubset(std::initializer_list<int> positions);
  explicit QubitSubset(std::vector<int> positions);

  std::span<const int> positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }

  /// Throws std::out_of_range if any position exceeds `n_qubits`.
  void check_fits(int n_qubits) const;

 private:
  std::vector<int> positions_;
};

/// <a|b>, conjugating `a`. Throws std::invalid_argument on size mismatch.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Equal to 1 exactly when the states agree up to global phase.
double fidelity_up_to_phase(const StateVector& a, const StateVector& b);

/// Applies `u` on the listed qubits and the identity on the rest.
StateVector apply_on_subset(const StateVector& state, const UnitaryMatrix& u,
                            const QubitSubset& qubits);

/// Kronecker products.
UnitaryMatrix tensor(const UnitaryMatrix& u, const UnitaryMatrix& v);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Born-rule probability of each computational outcome.
std::vector<double> probabilities(const StateVector& state);

struct Measurement {
  std::size_t outcome;
  std::string bits;
  double probability;
};

/// Samples one computational outcome; deterministic for a given seed.
Measurement measure_computational(const StateVector& state, std::uint64_t rng_seed);
Measurement measure_computational(const StateVector& state, Rng& rng);

/// "011" for index 3 of a 3-qubit register.
std::string bit_string(std::size_t index, int n_qubits);

/// Inverse of bit_string. Throws std::invalid_argument on anything other
/// than a string of '0'/'1' of length `n_qubits`.
std::size_t parse_bit_string(std::string_view bits, int n_qubits);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(Rng& rng);

/// Seed for an independent sub-stream, mixed from a master seed and a
/// stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix.
UnitaryMatrix random_unitary(std::size_t dim, Rng& rng);

/// Uniformly distributed pure state (normalized complex Gaussian vector).
StateVector random_state(int n_qubits, Rng& rng);

namespace gates {
UnitaryMatrix hadamard();
UnitaryMatrix pauli_x();
UnitaryMatrix pauli_y();
UnitaryMatrix pauli_z();
/// Control is the first (most significant) tensor factor.
UnitaryMatrix cnot();
}  // namespace gates

// State-vector text format:
//
//   nqubits <n>
//   <index> <re> <im>      one line per nonzero amplitude
//
// Blank lines and lines starting with '#' are skipped on input. Values are
// written with 17 significant digits so a dump reloads bit-exactly.

void write_state_text(std::ostream& out, const StateVector& state);

/// Throws std::runtime_error with a line number on malformed input.
StateVector read_state_text(std::istream& in);

}  // namespace densecode
