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

#include "densecode/encoding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace densecode {
namespace {

using Mat2 = std::array<std::array<Amplitude, 2>, 2>;
using Vec2 = std::array<Amplitude, 2>;

// Rows of the 2 x 2^{n-1} co-factor matrix of `state` split on `qubit`.
struct Cofactors {
  std::array<std::vector<Amplitude>, 2> rows;
  std::size_t width() const { return rows[0].size(); }
};

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 1 || qubit > state.n_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " not in a register of " +
                            std::to_string(state.n_qubits()) + " qubits");
  }
}

void check_pair(const StateVector& source, const StateVector& target, int qubit) {
  if (source.n_qubits() != target.n_qubits()) {
    throw std::invalid_argument("source has " + std::to_string(source.n_qubits()) +
                                " qubits, target has " + std::to_string(target.n_qubits()));
  }
  check_qubit(source, qubit);
}

Cofactors split_on(const StateVector& state, int qubit) {
  const int bit = state.n_qubits() - qubit;
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  Cofactors c;
  c.rows[0].assign(state.dim() / 2, 0.0);
  c.rows[1].assign(state.dim() / 2, 0.0);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const std::size_t a = (i >> bit) & 1U;
    const std::size_t rest = ((i >> (bit + 1)) << bit) | (i & low_mask);
    c.rows[a][rest] = state[i];
  }
  return c;
}

// G[r][r'] = sum_a conj(X[a][r]) X[a][r'].
std::vector<Amplitude> column_gram(const Cofactors& x) {
  const std::size_t m = x.width();
  std::vector<Amplitude> g(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      g[r * m + s] = std::conj(x.rows[0][r]) * x.rows[0][s] + std::conj(x.rows[1][r]) * x.rows[1][s];
  return g;
}

// A[a][b] = sum_r Y[a][r] conj(X[b][r]).
Mat2 cross(const Cofactors& y, const Cofactors& x) {
  Mat2 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t r = 0; r < x.width(); ++r) out[a][b] += y.rows[a][r] * std::conj(x.rows[b][r]);
  return out;
}

double norm2(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

Vec2 scaled(const Vec2& v, Amplitude s) { return {v[0] * s, v[1] * s}; }

Vec2 orthogonal_complement(const Vec2& v) { return {-std::conj(v[1]), std::conj(v[0])}; }

Vec2 times(const Mat2& m, const Vec2& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// Leading unit eigenvector of the Hermitian matrix [[p, w], [conj w, r]].
Vec2 leading_eigenvector(double p, Amplitude w, double r) {
  const double half_gap = 0.5 * (p - r);
  const double top = 0.5 * (p + r) + std::sqrt(half_gap * half_gap + std::norm(w));
  // Two algebraically equivalent candidates; keep the better conditioned one.
  const Vec2 a{w, top - p};
  const Vec2 b{top - r, std::conj(w)};
  const Vec2& v = norm2(a) >= norm2(b) ? a : b;
  const double n = norm2(v);
  if (n < 1e-300) return {1.0, 0.0};
  return scaled(v, 1.0 / n);
}

// Unitary factor U of the polar decomposition M = U P, completed arbitrarily
// on the kernel when M is singular. Built from the SVD M = sum_k s_k a_k b_k^dagger
// as U = sum_k a_k b_k^dagger.
Mat2 polar_unitary(const Mat2& m) {
  // H = M^dagger M.
  const double p = std::norm(m[0][0]) + std::norm(m[1][0]);
  const double r = std::norm(m[0][1]) + std::norm(m[1][1]);
  const Amplitude w = std::conj(m[0][0]) * m[0][1] + std::conj(m[1][0]) * m[1][1];
  const Vec2 b1 = leading_eigenvector(p, w, r);
  const Vec2 b2 = orthogonal_complement(b1);

  const Vec2 mb1 = times(m, b1);
  const double s1 = norm2(mb1);
  const Vec2 a1 = s1 > 1e-300 ? scaled(mb1, 1.0 / s1) : Vec2{1.0, 0.0};
  Vec2 a2 = orthogonal_complement(a1);
  // a2 is fixed up to phase by orthogonality; take the phase of M b2 when
  // the second singular value is nonzero.
  const Vec2 mb2 = times(m, b2);
  const Amplitude proj = std::conj(a2[0]) * mb2[0] + std::conj(a2[1]) * mb2[1];
  if (std::abs(proj) > 1e-300) a2 = scaled(a2, proj / std::abs(proj));

  Mat2 u{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      u[i][j] = a1[i] * std::conj(b1[j]) + a2[i] * std::conj(b2[j]);
  return u;
}

UnitaryMatrix to_unitary(const Mat2& m) {
  return UnitaryMatrix(2, {m[0][0], m[0][1], m[1][0], m[1][1]});
}

}  // namespace

EncodingOp encoding_op(int j) {
  // Rows are outputs, columns inputs, over |00>,|01>,|10>,|11>.
  static const std::array<std::array<int, 16>, 8> kTables{{
      {1, 0, 0, 0, /**/ 0, 1, 0, 0, /**/ 0, 0, 1, 0, /**/ 0, 0, 0, 1},
      {1, 0, 0, 0, /**/ 0, 1, 0, 0, /**/ 0, 0, -1, 0, /**/ 0, 0, 0, -1},
      {0, 0, 1, 0, /**/ 0, 0, 0, 1, /**/ 1, 0, 0, 0, /**/ 0, 1, 0, 0},
      {0, 0, 1, 0, /**/ 0, 0, 0, 1, /**/ -1, 0, 0, 0, /**/ 0, -1, 0, 0},
      {0, 1, 0, 0, /**/ 1, 0, 0, 0, /**/ 0, 0, 0, 1, /**/ 0, 0, 1, 0},
      {0, -1, 0, 0, /**/ 1, 0, 0, 0, /**/ 0, 0, 0, -1, /**/ 0, 0, 1, 0},
      {0, 0, 0, 1, /**/ 0, 0, 1, 0, /**/ 0, 1, 0, 0, /**/ 1, 0, 0, 0},
      {0, 0, 0, 1, /**/ 0, 0, 1, 0, /**/ 0, -1, 0, 0, /**/ -1, 0, 0, 0},
  }};
  if (j < 1 || j > 8) {
    throw std::out_of_range("message index " + std::to_string(j) + " outside 1..8");
  }
  const auto& table = kTables[static_cast<std::size_t>(j - 1)];
  std::vector<Amplitude> entries(table.begin(), table.end());
  return EncodingOp{j, UnitaryMatrix(4, std::move(entries)), QubitSubset{1, 2}};
}

StateVector encode(int message, const StateVector& shared) {
  if (shared.n_qubits() != 3) {
    throw std::invalid_argument("GHZ encoding needs a 3-qubit state");
  }
  const EncodingOp op = encoding_op(message);
  return apply_on_subset(shared, op.matrix, op.acts_on);
}

UnitaryMatrix bell_encoder(int message) {
  switch (message) {
    case 1: return UnitaryMatrix::identity(2);
    case 2: return gates::pauli_z();
    case 3: return gates::pauli_x();
    case 4: return UnitaryMatrix::from_rows({{0, 1}, {-1, 0}});
    default:
      throw std::out_of_range("Bell message index " + std::to_string(message) +
                              " outside 1..4");
  }
}

StateVector bell_encode(int message, const StateVector& shared) {
  if (shared.n_qubits() != 2) {
    throw std::invalid_argument("Bell encoding needs a 2-qubit state");
  }
  return apply_on_subset(shared, bell_encoder(message), QubitSubset{1});
}

ReachabilityVerdict reachable_by_single_qubit(const StateVector& source,
                                              const StateVector& target, int qubit) {
  check_pair(source, target, qubit);
  const Cofactors x = split_on(source, qubit);
  const Cofactors y = split_on(target, qubit);
  const auto gx = column_gram(x);
  const auto gy = column_gram(y);

  ReachabilityVerdict verdict;
  for (std::size_t i = 0; i < gx.size(); ++i)
    verdict.gram_mismatch = std::max(verdict.gram_mismatch, std::abs(gx[i] - gy[i]));
  verdict.reachable = verdict.gram_mismatch <= kReachabilityTolerance;

  if (verdict.reachable) {
    UnitaryMatrix u = to_unitary(polar_unitary(cross(y, x)));
    const double f = fidelity_up_to_phase(apply_on_subset(source, u, QubitSubset{qubit}), target);
    if (f < kWitnessFidelity) {
      throw std::logic_error("co-factor Gram matrices agree but the witness reaches fidelity " +
                             std::to_string(f));
    }
    verdict.witness = std::move(u);
  } else {
    verdict.obstruction = max_single_qubit_fidelity(source, target, qubit);
  }
  return verdict;
}

double max_single_qubit_fidelity(const StateVector& source, const StateVector& target,
                                 int qubit) {
  check_pair(source, target, qubit);
  // <target|(U on q)|source> = Tr(U K) with K = X Y^dagger, whose maximum
  // modulus over unitaries is the trace norm s1 + s2 of K. For 2x2,
  // (s1 + s2)^2 = |K|_F^2 + 2 |det K|.
  const Mat2 k = cross(split_on(source, qubit), split_on(target, qubit));
  const double frob = std::norm(k[0][0]) + std::norm(k[0][1]) + std::norm(k[1][0]) +
                      std::norm(k[1][1]);
  const double det = std::abs(k[0][0] * k[1][1] - k[0][1] * k[1][0]);
  return std::min(1.0, frob + 2.0 * det);
}

double reachability_oracle(const StateVector& source, const StateVector& target, int qubit,
                           int samples, std::uint64_t rng_seed) {
  check_pair(source, target, qubit);
  if (samples < 1) throw std::invalid_argument("oracle needs at least one sample");
  const QubitSubset where{qubit};
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(rng_seed, static_cast<std::uint64_t>(s)));
    const UnitaryMatrix u = random_unitary(2, rng);
    best = std::max(best, fidelity_up_to_phase(apply_on_subset(source, u, where), target));
  }
  return best;
}

ReachabilityMatrix reachability_matrix(const BasisCatalog& catalog, int qubit) {
  const std::size_t n = catalog.size();
  ReachabilityMatrix m{catalog.name(), qubit, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.reachable[i][j] =
          reachable_by_single_qubit(catalog.states()[i], catalog.states()[j], qubit).reachable;
  return m;
}

std::vector<std::vector<double>> oracle_matrix(const BasisCatalog& catalog, int qubit,
                                               int samples, std::uint64_t rng_seed) {
  const std::size_t n = catalog.size();
  check_qubit(catalog.states().front(), qubit);
  if (samples < 1) throw std::invalid_argument("oracle needs at least one sample");
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  // One worker per source row; each pair has its own seed.
  std::vector<std::jthread> workers;
  workers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i] {
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] = reachability_oracle(catalog.states()[i], catalog.states()[j], qubit, samples,
                                        derive_seed(rng_seed, i * n + j));
      }
    });
  }
  workers.clear();
  return out;
}

}  // namespace densecode
