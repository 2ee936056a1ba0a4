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

// The three named orthonormal bases: Bell (2 qubits), GHZ and phi (3 qubits).
// Indices are 1-based throughout.

#include <string>
#include <string_view>
#include <vector>

#include "densecode/qstate.hpp"

namespace densecode {

enum class BasisName { bell, ghz, phi };

std::string_view to_string(BasisName name);

/// Parses "bell", "ghz" or "phi". Throws std::invalid_argument otherwise.
BasisName parse_basis_name(std::string_view text);

/// Bell states in the order Phi+, Phi-, Psi+, Psi-.
StateVector bell_state(int i);

/// GHZ states psi_1..psi_8:
///   psi_1,2 = (|000> +- |111>)/sqrt2   psi_3,4 = (|011> +- |100>)/sqrt2
///   psi_5,6 = (|010> +- |101>)/sqrt2   psi_7,8 = (|001> +- |110>)/sqrt2
StateVector ghz_state(int i);

/// Equal-weight states phi_1..phi_8 with amplitudes +-1/(2 sqrt2).
StateVector phi_state(int i);

/// Immutable indexed family of states. `state(i)` is 1-based.
class BasisCatalog {
 public:
  BasisCatalog(std::string name, std::vector<StateVector> states);

  static BasisCatalog builtin(BasisName name);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return states_.size(); }
  int n_qubits() const noexcept { return states_.front().n_qubits(); }
  const StateVector& state(int i) const;
  const std::vector<StateVector>& states() const noexcept { return states_; }

 private:
  std::string name_;
  std::vector<StateVector> states_;
};

struct OrthonormalityReport {
  double max_off_diagonal;  // max_{i != j} |<i|j>|
  double max_norm_defect;   // max_i |1 - <i|i>|

  bool within(double tolerance) const {
    return max_off_diagonal <= tolerance && max_norm_defect <= tolerance;
  }
};

OrthonormalityReport verify_orthonormal(const BasisCatalog& catalog);

/// max entry of |sum_i |i><i| - I|; zero for a complete orthonormal basis.
double resolution_of_identity_error(const BasisCatalog& catalog);

}  // namespace densecode
