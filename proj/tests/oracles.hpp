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

// Reference computations for tests. Everything here works on plain nested
// vectors and explicit full-register matrices, and does not call into the
// library's gate application, basis construction or network code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace densecode::testing {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline std::size_t index_of(const std::string& bits) {
  std::size_t i = 0;
  for (char c : bits) i = 2 * i + static_cast<std::size_t>(c == '1');
  return i;
}

/// Sum of coefficient * |bits> terms.
inline Vec ket(int n_qubits, const std::vector<std::pair<std::string, C>>& terms) {
  Vec v(std::size_t{1} << n_qubits);
  for (const auto& [bits, c] : terms) v[index_of(bits)] += c;
  return v;
}

inline Vec bell_reference(int i) {
  const double h = kInvSqrt2;
  switch (i) {
    case 1: return ket(2, {{"00", h}, {"11", h}});
    case 2: return ket(2, {{"00", h}, {"11", -h}});
    case 3: return ket(2, {{"01", h}, {"10", h}});
    default: return ket(2, {{"01", h}, {"10", -h}});
  }
}

/// psi_i as the listed pair of kets with a +/- sign.
inline Vec ghz_reference(int i) {
  static const char* kPairs[4][2] = {{"000", "111"}, {"011", "100"}, {"010", "101"}, {"001", "110"}};
  const auto& p = kPairs[(i - 1) / 2];
  const double sign = (i % 2 == 1) ? 1.0 : -1.0;
  return ket(3, {{p[0], kInvSqrt2}, {p[1], sign * kInvSqrt2}});
}

/// phi_i from its printed sign string over |000>..|111>.
inline Vec phi_reference(int i) {
  static const char* kSigns[8] = {"++++++++", "++++----", "++----++", "++--++--",
                                  "+-+--++-", "+-+-+--+", "+--+-+-+", "+--++-+-"};
  Vec v(8);
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  for (int k = 0; k < 8; ++k) v[static_cast<std::size_t>(k)] = kSigns[i - 1][k] == '+' ? a : -a;
  return v;
}

inline C dot(const Vec& a, const Vec& b) {
  C s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double overlap2(const Vec& a, const Vec& b) { return std::norm(dot(a, b)); }

inline Vec matvec(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  Mat out(a.size(), std::vector<C>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat identity(std::size_t d) {
  Mat m(d, std::vector<C>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

/// Full 2^n x 2^n matrix of `u` acting on the 1-based `positions`, built
/// element by element: <r|U_full|c> = u[sub(r)][sub(c)] if r and c agree
/// off the subset, else 0.
inline Mat full_operator(const Mat& u, const std::vector<int>& positions, int n) {
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [n](std::size_t idx, int q) { return (idx >> (n - q)) & 1U; };
  Mat out(dim, std::vector<C>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool same_rest = true;
      for (int q = 1; q <= n; ++q) {
        bool in_subset = false;
        for (int p : positions) in_subset = in_subset || p == q;
        if (!in_subset && bit(r, q) != bit(c, q)) same_rest = false;
      }
      if (!same_rest) continue;
      std::size_t sr = 0;
      std::size_t sc = 0;
      for (int p : positions) {
        sr = 2 * sr + bit(r, p);
        sc = 2 * sc + bit(c, p);
      }
      out[r][c] = u[sr][sc];
    }
  }
  return out;
}

/// Permutation matrix |..a..b..> -> |..a..(b xor a)..>.
inline Mat full_cnot(int control, int target, int n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat m(dim, std::vector<C>(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t r = c;
    if ((c >> (n - control)) & 1U) r ^= std::size_t{1} << (n - target);
    m[r][c] = 1.0;
  }
  return m;
}

inline Mat hadamard2() { return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}; }
inline Mat pauli_x2() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline Mat pauli_y2() { return {{0.0, C(0, -1)}, {C(0, 1), 0.0}}; }
inline Mat pauli_z2() { return {{1.0, 0.0}, {0.0, -1.0}}; }

/// The GHZ disentangler as one explicit operator: H1 * CNOT(1,2) * CNOT(1,3).
inline Mat ghz_disentangler_reference() {
  return matmul(full_operator(hadamard2(), {1}, 3),
                matmul(full_cnot(1, 2, 3), full_cnot(1, 3, 3)));
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace densecode::testing
