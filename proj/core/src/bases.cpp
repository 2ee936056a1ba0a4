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

#include "densecode/bases.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace densecode {
namespace {

using SignRow = std::array<int, 8>;

// Integer coefficient patterns over |000>..|111> (or |00>..|11> for Bell),
// scaled by a single normalization constant when the state is built.
constexpr std::array<std::array<int, 4>, 4> kBellSigns{{
    {1, 0, 0, 1},   // Phi+
    {1, 0, 0, -1},  // Phi-
    {0, 1, 1, 0},   // Psi+
    {0, 1, -1, 0},  // Psi-
}};

constexpr std::array<SignRow, 8> kGhzSigns{{
    {1, 0, 0, 0, 0, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 1, 1, 0, 0, 0},
    {0, 0, 0, 1, -1, 0, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, -1, 0, 0},
    {0, 1, 0, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 0, -1, 0},
}};

constexpr std::array<SignRow, 8> kPhiSigns{{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, -1, -1, -1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 1, -1, -1, 1, 1, -1, -1},
    {1, -1, 1, -1, -1, 1, 1, -1},
    {1, -1, 1, -1, 1, -1, -1, 1},
    {1, -1, -1, 1, -1, 1, -1, 1},
    {1, -1, -1, 1, 1, -1, 1, -1},
}};

template <std::size_t N>
StateVector from_signs(int n_qubits, const std::array<int, N>& signs, double scale) {
  std::vector<Amplitude> amps(N);
  std::transform(signs.begin(), signs.end(), amps.begin(),
                 [scale](int s) { return Amplitude(s * scale, 0.0); });
  return StateVector(n_qubits, std::move(amps));
}

void check_index(std::string_view basis, int i, int count) {
  if (i < 1 || i > count) {
    throw std::out_of_range(std::string(basis) + " index " + std::to_string(i) +
                            " outside 1.." + std::to_string(count));
  }
}

}  // namespace

std::string_view to_string(BasisName name) {
  switch (name) {
    case BasisName::bell: return "bell";
    case BasisName::ghz: return "ghz";
    case BasisName::phi: return "phi";
  }
  return "?";
}

BasisName parse_basis_name(std::string_view text) {
  if (text == "bell") return BasisName::bell;
  if (text == "ghz") return BasisName::ghz;
  if (text == "phi") return BasisName::phi;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

StateVector bell_state(int i) {
  check_index("bell", i, 4);
  return from_signs(2, kBellSigns[static_cast<std::size_t>(i - 1)], 1.0 / std::sqrt(2.0));
}

StateVector ghz_state(int i) {
  check_index("ghz", i, 8);
  return from_signs(3, kGhzSigns[static_cast<std::size_t>(i - 1)], 1.0 / std::sqrt(2.0));
}

StateVector phi_state(int i) {
  check_index("phi", i, 8);
  return from_signs(3, kPhiSigns[static_cast<std::size_t>(i - 1)], 1.0 / (2.0 * std::sqrt(2.0)));
}

BasisCatalog::BasisCatalog(std::string name, std::vector<StateVector> states)
    : name_(std::move(name)), states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("catalog '" + name_ + "' is empty");
  for (const auto& s : states_) {
    if (s.n_qubits() != states_.front().n_qubits()) {
      throw std::invalid_argument("catalog '" + name_ + "' mixes register sizes");
    }
  }
}

BasisCatalog BasisCatalog::builtin(BasisName name) {
  std::vector<StateVector> states;
  switch (name) {
    case BasisName::bell:
      for (int i = 1; i <= 4; ++i) states.push_back(bell_state(i));
      break;
    case BasisName::ghz:
      for (int i = 1; i <= 8; ++i) states.push_back(ghz_state(i));
      break;
    case BasisName::phi:
      for (int i = 1; i <= 8; ++i) states.push_back(phi_state(i));
      break;
  }
  return BasisCatalog(std::string(to_string(name)), std::move(states));
}

const StateVector& BasisCatalog::state(int i) const {
  check_index(name_, i, static_cast<int>(states_.size()));
  return states_[static_cast<std::size_t>(i - 1)];
}

OrthonormalityReport verify_orthonormal(const BasisCatalog& catalog) {
  OrthonormalityReport report{0.0, 0.0};
  const auto& s = catalog.states();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Amplitude overlap = inner_product(s[i], s[j]);
      if (i == j) {
        report.max_norm_defect = std::max(report.max_norm_defect, std::abs(1.0 - overlap));
      } else {
        report.max_off_diagonal = std::max(report.max_off_diagonal, std::abs(overlap));
      }
    }
  }
  return report;
}

double resolution_of_identity_error(const BasisCatalog& catalog) {
  const std::size_t dim = catalog.states().front().dim();
  std::vector<Amplitude> sum(dim * dim);
  for (const auto& s : catalog.states())
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) sum[r * dim + c] += s[r] * std::conj(s[c]);
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      worst = std::max(worst, std::abs(sum[r * dim + c] - (r == c ? 1.0 : 0.0)));
  return worst;
}

}  // namespace densecode
