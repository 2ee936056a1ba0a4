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

// Sender-side operations: the eight two-qubit GHZ encoders, the four
// single-qubit Bell encoders, and an exact analyzer for whether one state
// can be turned into another by a unitary on a single qubit.

#include <cstdint>
#include <optional>
#include <vector>

#include "densecode/bases.hpp"
#include "densecode/qstate.hpp"

namespace densecode {

/// Tolerance for the Gram-matrix comparison in reachable_by_single_qubit.
inline constexpr double kReachabilityTolerance = 1e-10;

/// Minimum fidelity a reachability witness must achieve.
inline constexpr double kWitnessFidelity = 1.0 - 1e-9;

struct EncodingOp {
  int message_index;
  UnitaryMatrix matrix;  // in the {|00>,|01>,|10>,|11>} basis of the pair
  QubitSubset acts_on;
};

/// Encoder taking psi_1 to psi_j when applied to qubits (1,2). Throws
/// std::out_of_range unless 1 <= j <= 8.
EncodingOp encoding_op(int j);

/// Applies encoder `message` to qubits (1,2) of a 3-qubit state.
StateVector encode(int message, const StateVector& shared);

/// Single-qubit encoder taking Phi+ to Bell state `message` (I, Z, X, and
/// |0> -> -|1>, |1> -> |0>).
UnitaryMatrix bell_encoder(int message);

/// Applies bell_encoder(message) to qubit 1 of a 2-qubit state.
StateVector bell_encode(int message, const StateVector& shared);

struct ReachabilityVerdict {
  int source_index = 0;  // catalog indices; 0 for free-standing states
  int target_index = 0;
  bool reachable = false;
  /// Largest |(G_source - G_target)_{rr'}| between co-factor Gram matrices.
  double gram_mismatch = 0.0;
  /// 2x2 unitary achieving the target when reachable.
  std::optional<UnitaryMatrix> witness;
  /// Best fidelity any single-qubit unitary achieves when unreachable.
  std::optional<double> obstruction;
};

/// Decides whether (U on `qubit`)|source> = phase * |target> for some U.
///
/// Write source = |0>|x0> + |1>|x1> and target = |0>|y0> + |1>|y1> with the
/// split on `qubit`, and collect the co-factors as rows of 2 x 2^{n-1}
/// matrices X and Y. A unitary with U X = Y exists iff X^dagger X = Y^dagger Y;
/// a global phase on the target folds into U, so no separate phase search is
/// needed. Throws std::invalid_argument on a dimension mismatch.
ReachabilityVerdict reachable_by_single_qubit(const StateVector& source,
                                              const StateVector& target, int qubit);

/// max over single-qubit unitaries U of |<target|(U on qubit)|source>|^2,
/// evaluated in closed form as the squared trace norm of the 2x2 overlap
/// matrix between co-factors.
double max_single_qubit_fidelity(const StateVector& source, const StateVector& target,
                                 int qubit);

/// Brute-force check: the best fidelity over `samples` Haar-random 2x2
/// unitaries applied on `qubit`. Sample s draws from stream
/// derive_seed(rng_seed, s), so results do not depend on evaluation order.
double reachability_oracle(const StateVector& source, const StateVector& target, int qubit,
                           int samples, std::uint64_t rng_seed);

struct ReachabilityMatrix {
  std::string basis;
  int qubit = 1;
  std::vector<std::vector<bool>> reachable;  // [source - 1][target - 1]

  bool operator==(const ReachabilityMatrix&) const = default;
};

ReachabilityMatrix reachability_matrix(const BasisCatalog& catalog, int qubit);

/// Oracle fidelities for every ordered pair; pair (i,j) uses the stream
/// derive_seed(rng_seed, i * size + j).
std::vector<std::vector<double>> oracle_matrix(const BasisCatalog& catalog, int qubit,
                                               int samples, std::uint64_t rng_seed);

}  // namespace densecode
