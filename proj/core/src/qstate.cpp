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

#include "densecode/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace densecode {
namespace {

bool is_finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

double l2_norm(std::span<const Amplitude> v) {
  double sum = 0.0;
  for (const auto& a : v) sum += std::norm(a);
  return std::sqrt(sum);
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("state of " + std::to_string(n_qubits) +
                                " qubits needs " +
                                std::to_string(std::size_t{1} << n_qubits) +
                                " amplitudes, got " +
                                std::to_string(amplitudes_.size()));
  }
  if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), is_finite)) {
    throw std::invalid_argument("state has a non-finite amplitude");
  }
  const double n = l2_norm(amplitudes_);
  if (std::abs(n - 1.0) > kTolerance) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "state norm " << n << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside register of dimension " + std::to_string(dim));
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(int n_qubits, std::vector<Amplitude> amplitudes) {
  const double n = l2_norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  for (auto& a : amplitudes) a /= n;
  return StateVector(n_qubits, std::move(amplitudes));
}

double StateVector::norm() const noexcept { return l2_norm(amplitudes_); }

StateVector StateVector::with_phase(Amplitude phase) const {
  if (std::abs(std::abs(phase) - 1.0) > kTolerance) {
    throw std::invalid_argument("global phase must have unit modulus");
  }
  std::vector<Amplitude> amps(amplitudes_);
  for (auto& a : amps) a *= phase;
  return StateVector(n_qubits_, std::move(amps));
}

// ---------------------------------------------------------------------------
// UnitaryMatrix

double unitarity_defect(std::size_t dim, std::span<const Amplitude> m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) sum += std::conj(m[k * dim + i]) * m[k * dim + j];
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (!is_power_of_two(dim) || log2_exact(dim) > kMaxQubits) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a supported power of two");
  }
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument("matrix of dimension " + std::to_string(dim) +
                                " needs " + std::to_string(dim * dim) + " entries");
  }
  if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
    throw std::invalid_argument("matrix has a non-finite entry");
  }
  const double defect = unitarity_defect(dim_, entries_);
  if (defect > kTolerance) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "matrix is not unitary (max |U'U - I| = " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::from_rows(
    std::initializer_list<std::initializer_list<Amplitude>> rows) {
  const std::size_t dim = rows.size();
  std::vector<Amplitude> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw std::invalid_argument("matrix rows must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return UnitaryMatrix(dim, std::move(entries));
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  std::vector<Amplitude> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return UnitaryMatrix(dim, std::move(entries));
}

int UnitaryMatrix::n_qubits() const noexcept { return log2_exact(dim_); }

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Amplitude> out(entries_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
  return UnitaryMatrix(dim_, std::move(out));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<Amplitude> out(entries_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Amplitude a = entries_[i * dim_ + k];
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] += a * rhs.entries_[k * dim_ + j];
    }
  return UnitaryMatrix(dim_, std::move(out));
}

StateVector UnitaryMatrix::apply(const StateVector& state) const {
  if (state.dim() != dim_) {
    throw std::invalid_argument("matrix of dimension " + std::to_string(dim_) +
                                " applied to state of dimension " +
                                std::to_string(state.dim()));
  }
  const auto in = state.amplitudes();
  std::vector<Amplitude> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Amplitude sum = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) sum += entries_[i * dim_ + j] * in[j];
    out[i] = sum;
  }
  return StateVector(state.n_qubits(), std::move(out));
}

double max_entry_difference(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// QubitSubset

QubitSubset::QubitSubset(std::initializer_list<int> positions)
    : QubitSubset(std::vector<int>(positions)) {}

QubitSubset::QubitSubset(std::vector<int> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) throw std::invalid_argument("qubit subset is empty");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1 || positions_[i] > kMaxQubits) {
      throw std::out_of_range("qubit position " + std::to_string(positions_[i]) +
                              " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (positions_[i] == positions_[j]) {
        throw std::invalid_argument("qubit position " + std::to_string(positions_[i]) +
                                    " listed twice");
      }
    }
  }
}

void QubitSubset::check_fits(int n_qubits) const {
  for (int q : positions_) {
    if (q > n_qubits) {
      throw std::out_of_range("qubit " + std::to_string(q) + " not in a register of " +
                              std::to_string(n_qubits) + " qubits");
    }
  }
}

// ---------------------------------------------------------------------------
// Free operations

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("inner product of states with " +
                                std::to_string(a.n_qubits()) + " and " +
                                std::to_string(b.n_qubits()) + " qubits");
  }
  Amplitude sum = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

double fidelity_up_to_phase(const StateVector& a, const StateVector& b) {
  return std::min(1.0, std::norm(inner_product(a, b)));
}

StateVector apply_on_subset(const StateVector& state, const UnitaryMatrix& u,
                            const QubitSubset& qubits) {
  qubits.check_fits(state.n_qubits());
  const std::size_t k = qubits.size();
  if (u.dim() != (std::size_t{1} << k)) {
    throw std::invalid_argument("operator of dimension " + std::to_string(u.dim()) +
                                " cannot act on " + std::to_string(k) + " qubits");
  }
  const int n = state.n_qubits();
  // Bit mask in the register index for each operator bit, most significant
  // operator bit first.
  std::vector<std::size_t> masks(k);
  std::size_t subset_mask = 0;
  for (std::size_t b = 0; b < k; ++b) {
    masks[b] = std::size_t{1} << (n - qubits.positions()[b]);
    subset_mask |= masks[b];
  }
  auto scatter = [&](std::size_t local) {
    std::size_t bits = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (local & (std::size_t{1} << (k - 1 - b))) bits |= masks[b];
    return bits;
  };
  std::vector<std::size_t> offsets(u.dim());
  for (std::size_t s = 0; s < u.dim(); ++s) offsets[s] = scatter(s);

  const auto in = state.amplitudes();
  std::vector<Amplitude> out(state.dim());
  std::vector<Amplitude> local_in(u.dim());
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & subset_mask) continue;
    for (std::size_t s = 0; s < u.dim(); ++s) local_in[s] = in[base | offsets[s]];
    for (std::size_t r = 0; r < u.dim(); ++r) {
      Amplitude sum = 0.0;
      for (std::size_t s = 0; s < u.dim(); ++s) sum += u(r, s) * local_in[s];
      out[base | offsets[r]] = sum;
    }
  }
  return StateVector(n, std::move(out));
}

UnitaryMatrix tensor(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  const std::size_t du = u.dim();
  const std::size_t dv = v.dim();
  const std::size_t d = du * dv;
  std::vector<Amplitude> out(d * d);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < du; ++j)
      for (std::size_t k = 0; k < dv; ++k)
        for (std::size_t l = 0; l < dv; ++l)
          out[(i * dv + k) * d + (j * dv + l)] = u(i, j) * v(k, l);
  return UnitaryMatrix(d, std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Amplitude> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(a.n_qubits() + b.n_qubits(), std::move(out));
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.dim());
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

Measurement measure_computational(const StateVector& state, Rng& rng) {
  const auto p = probabilities(state);
  const double u = uniform01(rng);
  double cumulative = 0.0;
  std::size_t chosen = p.size();
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    last_nonzero = i;
    cumulative += p[i];
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }
  // Rounding can leave the cumulative sum a hair below 1.
  if (chosen == p.size()) chosen = last_nonzero;
  return {chosen, bit_string(chosen, state.n_qubits()), p[chosen]};
}

Measurement measure_computational(const StateVector& state, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return measure_computational(state, rng);
}

std::string bit_string(std::size_t index, int n_qubits) {
  std::string bits(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if (index & (std::size_t{1} << (n_qubits - 1 - q))) bits[static_cast<std::size_t>(q)] = '1';
  return bits;
}

std::size_t parse_bit_string(std::string_view bits, int n_qubits) {
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("expected " + std::to_string(n_qubits) +
                                " bits, got '" + std::string(bits) + "'");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("malformed bit string '" + std::string(bits) + "'");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (stream_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

UnitaryMatrix random_unitary(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Columns of a Gaussian matrix, orthonormalized in order (modified
  // Gram-Schmidt, two passes).
  std::vector<std::vector<Amplitude>> cols(dim, std::vector<Amplitude>(dim));
  for (auto& c : cols)
    for (auto& a : c) a = Amplitude(gauss(rng), gauss(rng));
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Amplitude proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(cols[i][r]) * cols[j][r];
        for (std::size_t r = 0; r < dim; ++r) cols[j][r] -= proj * cols[i][r];
      }
    }
    const double n = l2_norm(cols[j]);
    for (auto& a : cols[j]) a /= n;
  }
  std::vector<Amplitude> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] = cols[c][r];
  return UnitaryMatrix(dim, std::move(entries));
}

StateVector random_state(int n_qubits, Rng& rng) {
  check_qubit_count(n_qubits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) a = Amplitude(gauss(rng), gauss(rng));
  return StateVector::normalized(n_qubits, std::move(amps));
}

namespace gates {

UnitaryMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return UnitaryMatrix::from_rows({{h, h}, {h, -h}});
}

UnitaryMatrix pauli_x() { return UnitaryMatrix::from_rows({{0, 1}, {1, 0}}); }

UnitaryMatrix pauli_y() {
  const Amplitude i(0.0, 1.0);
  return UnitaryMatrix::from_rows({{0, -i}, {i, 0}});
}

UnitaryMatrix pauli_z() { return UnitaryMatrix::from_rows({{1, 0}, {0, -1}}); }

UnitaryMatrix cnot() {
  return UnitaryMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

}  // namespace gates

// ---------------------------------------------------------------------------
// Text format

void write_state_text(std::ostream& out, const StateVector& state) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "nqubits " << state.n_qubits() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == 0.0) continue;
    out << i << ' ' << amps[i].real() << ' ' << amps[i].imag() << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

StateVector read_state_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<Amplitude> amps;
  std::vector<bool> seen;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("state text line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n_qubits < 0) {
      std::string key;
      if (!(fields >> key >> n_qubits) || key != "nqubits") fail("expected 'nqubits <n>'");
      if (n_qubits < 1 || n_qubits > kMaxQubits) fail("unsupported qubit count");
      amps.assign(std::size_t{1} << n_qubits, 0.0);
      seen.assign(amps.size(), false);
    } else {
      long long index = -1;
      double re = 0.0;
      double im = 0.0;
      if (!(fields >> index >> re >> im)) fail("expected '<index> <re> <im>'");
      if (index < 0 || static_cast<std::size_t>(index) >= amps.size()) fail("index out of range");
      if (seen[static_cast<std::size_t>(index)]) fail("duplicate index");
      seen[static_cast<std::size_t>(index)] = true;
      amps[static_cast<std::size_t>(index)] = Amplitude(re, im);
    }
    std::string extra;
    if (fields >> extra) fail("trailing content '" + extra + "'");
  }
  if (n_qubits < 0) throw std::runtime_error("state text: missing 'nqubits' header");
  try {
    return StateVector(n_qubits, std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("state text: ") + e.what());
  }
}

}  // namespace densecode
