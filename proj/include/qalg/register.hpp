// Copyright 2026 The qalg developers
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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qalg/core.hpp"

namespace qalg {

/// A 2x2 complex matrix, row major. The building block for all
/// single-qubit gates.
struct Mat2 {
  Complex m00, m01, m10, m11;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  /// max |(U U^dag - I)_{rc}|
  double unitarity_defect() const {
    const Mat2 p = *this * adjoint();
    return std::max({std::abs(p.m00 - 1.0), std::abs(p.m01),
                     std::abs(p.m10), std::abs(p.m11 - 1.0)});
  }
};

class QuantumRegister;

/// Result of measuring a subset of qubits: the observed bits (bit j of
/// `result` is the value of the j-th measured qubit), the exact
/// pre-measurement probability of that outcome, and the collapsed,
/// renormalized state.
struct MeasurementOutcome {
  BasisIndex result = 0;
  double probability = 0.0;
  std::vector<Complex> post_amplitudes;  // collapsed state, full register
};

/// An n-qubit state as a dense array of 2^n complex amplitudes.
///
/// Qubit i is bit i of the basis index (least significant first). All
/// gate appliers are linear maps; normalization is an invariant preserved
/// by unitary operations, never enforced at runtime. Registers are plain
/// values: copy, move and destroy freely, but do not mutate one register
/// from two threads at once.
class QuantumRegister {
 public:
  explicit QuantumRegister(int n_qubits, BasisIndex initial = 0)
      : n_qubits_(n_qubits) {
    const int max = config::max_qubits();
    if (n_qubits < 1 || n_qubits > max) {
      throw std::invalid_argument("register size " + std::to_string(n_qubits) +
                                  " outside [1, " + std::to_string(max) + "]");
    }
    amps_.assign(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    if (initial >= amps_.size()) {
      throw std::invalid_argument("initial basis index out of range");
    }
    amps_[initial] = 1.0;
  }

  /// Wraps an existing amplitude vector (size must be a power of two).
  /// The vector is taken as is; callers own normalization.
  static QuantumRegister from_amplitudes(std::vector<Complex> amps) {
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
      throw std::invalid_argument("amplitude count must be a power of two");
    }
    int n = 0;
    while ((std::uint64_t{1} << n) < amps.size()) ++n;
    QuantumRegister reg(n);
    reg.amps_ = std::move(amps);
    return reg;
  }

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(BasisIndex x) const { return amps_.at(x); }
  void set_amplitude(BasisIndex x, Complex v) { amps_.at(x) = v; }

  double norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  /// Applies a 2x2 unitary to one qubit, pairing amplitudes that differ
  /// only in that qubit's bit.
  void apply_single_qubit(int qubit, const Mat2& u) {
    check_qubit(qubit);
    check_unitary(u);
    const std::uint64_t stride = std::uint64_t{1} << qubit;
    for (std::uint64_t group = 0; group < amps_.size(); group += stride << 1) {
      for (std::uint64_t i = group; i < group + stride; ++i) {
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | stride];
        amps_[i] = u.m00 * a0 + u.m01 * a1;
        amps_[i | stride] = u.m10 * a0 + u.m11 * a1;
      }
    }
  }

  /// Applies u to `target` only on the subspace where `control` is 1.
  void apply_controlled_single_qubit(int control, int target, const Mat2& u) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
      throw std::invalid_argument("control equals target qubit");
    }
    check_unitary(u);
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if ((i & cbit) == 0 || (i & tbit) != 0) continue;
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i | tbit];
      amps_[i] = u.m00 * a0 + u.m01 * a1;
      amps_[i | tbit] = u.m10 * a0 + u.m11 * a1;
    }
  }

  /// Relabels basis states: amplitude at x moves to perm(x). perm must be
  /// a bijection on [0, 2^n); with debug checks on (or validate = true)
  /// a one-pass coverage check rejects non-bijections.
  void apply_permutation(const std::function<BasisIndex(BasisIndex)>& perm,
                         bool validate = false) {
    std::vector<Complex> next(amps_.size());
    if (validate || config::debug_checks()) {
      std::vector<std::uint8_t> seen(amps_.size(), 0);
      for (std::uint64_t x = 0; x < amps_.size(); ++x) {
        const BasisIndex y = perm(x);
        if (y >= amps_.size() || seen[y]) {
          throw std::invalid_argument("permutation is not a bijection");
        }
        seen[y] = 1;
        next[y] = amps_[x];
      }
    } else {
      for (std::uint64_t x = 0; x < amps_.size(); ++x) next[perm(x)] = amps_[x];
    }
    amps_ = std::move(next);
  }

  /// Permutes the bits in [target_offset, target_offset + target_bits)
  /// only where `control` is 1; all other bits ride along unchanged.
  void apply_controlled_permutation(
      int control, int target_offset, int target_bits,
      const std::function<BasisIndex(BasisIndex)>& perm) {
    check_qubit(control);
    check_range(target_offset, target_bits);
    if (control >= target_offset && control < target_offset + target_bits) {
      throw std::invalid_argument("control overlaps permutation target");
    }
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t mask = (std::uint64_t{1} << target_bits) - 1;
    std::vector<Complex> next(amps_);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if ((i & cbit) == 0) continue;
      const BasisIndex x = (i >> target_offset) & mask;
      const BasisIndex y = perm(x);
      const std::uint64_t j =
          (i & ~(mask << target_offset)) | (y << target_offset);
      next[j] = amps_[i];
    }
    amps_ = std::move(next);
  }

  /// Multiplies amplitude x by e^{i phase(x)}.
  void apply_diagonal(const std::function<double(BasisIndex)>& phase) {
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      amps_[x] *= std::polar(1.0, phase(x));
    }
  }

  /// Flips the sign of amplitudes selected by the predicate. Exact form
  /// of apply_diagonal with phase pi on the selected set.
  void apply_sign_flip(const std::function<bool(BasisIndex)>& flip) {
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      if (flip(x)) amps_[x] = -amps_[x];
    }
  }

  /// Runs `action` on the (n-1)-qubit sub-register obtained by fixing
  /// `control` = 1 and deleting its bit from the index. The sub-register
  /// is not normalized (its norm is sqrt of the control=1 mass); actions
  /// must be linear maps. Amplitudes with control = 0 are untouched.
  void apply_controlled(int control,
                        const std::function<void(QuantumRegister&)>& action) {
    check_qubit(control);
    if (n_qubits_ < 2) {
      throw std::invalid_argument("controlled action needs a second qubit");
    }
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t low = cbit - 1;
    QuantumRegister sub(n_qubits_ - 1);
    sub.amps_.assign(sub.amps_.size(), Complex{0.0, 0.0});
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if ((i & cbit) == 0) continue;
      sub.amps_[(i & low) | ((i >> 1) & ~low)] = amps_[i];
    }
    action(sub);
    if (sub.amps_.size() != amps_.size() / 2) {
      throw std::logic_error("controlled action resized its register");
    }
    for (std::uint64_t z = 0; z < sub.amps_.size(); ++z) {
      const std::uint64_t i = (z & low) | ((z & ~low) << 1) | cbit;
      amps_[i] = sub.amps_[z];
    }
  }

  /// Sum of |amplitude|^2 over basis states satisfying the predicate.
  double probability_of(const std::function<bool(BasisIndex)>& pred) const {
    double p = 0.0;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      if (pred(x)) p += std::norm(amps_[x]);
    }
    return p;
  }

  /// Probability that `qubit` reads `value` (0 or 1).
  double probability_of_qubit(int qubit, int value) const {
    check_qubit(qubit);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      if (((x & bit) != 0) == (value != 0)) p += std::norm(amps_[x]);
    }
    return p;
  }

  /// Measures the listed qubits (bit j of the outcome is qubit
  /// qubits[j]). One uniform draw selects a joint basis state from the
  /// exact cumulative distribution; the outcome is its restriction to
  /// the listed qubits. The register collapses in place and the same
  /// collapsed state is returned in the outcome.
  MeasurementOutcome measure_qubits(std::span<const int> qubits,
                                    std::mt19937_64& rng) {
    if (qubits.empty()) {
      throw std::invalid_argument("measurement needs at least one qubit");
    }
    for (int q : qubits) check_qubit(q);

    const double u = uniform_unit(rng) * squared_norm();
    std::uint64_t sampled = 0;
    std::uint64_t last_support = 0;
    bool found = false;
    double cumulative = 0.0;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      const double p = std::norm(amps_[x]);
      if (p > 0.0) last_support = x;
      cumulative += p;
      if (u < cumulative) {
        sampled = x;
        found = true;
        break;
      }
    }
    // Rounding can leave u marginally past the final cumulative sum;
    // fall back to the last basis state with support.
    if (!found) sampled = last_support;

    BasisIndex result = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      if (sampled & (std::uint64_t{1} << qubits[j])) {
        result |= std::uint64_t{1} << j;
      }
    }

    double mass = 0.0;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
      if (matches(x, qubits, result)) {
        mass += std::norm(amps_[x]);
      } else {
        amps_[x] = Complex{0.0, 0.0};
      }
    }
    const double scale = 1.0 / std::sqrt(mass);
    for (Complex& a : amps_) a *= scale;

    MeasurementOutcome out;
    out.result = result;
    out.probability = mass;
    out.post_amplitudes = amps_;
    return out;
  }

 private:
  double squared_norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
  }

  static bool matches(std::uint64_t x, std::span<const int> qubits,
                      BasisIndex result) {
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      const bool bit = (x >> qubits[j]) & 1;
      const bool want = (result >> j) & 1;
      if (bit != want) return false;
    }
    return true;
  }

  void check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_) {
      throw std::invalid_argument("qubit index " + std::to_string(q) +
                                  " out of range for " +
                                  std::to_string(n_qubits_) + " qubits");
    }
  }

  void check_range(int offset, int bits) const {
    if (bits < 1 || offset < 0 || offset + bits > n_qubits_) {
      throw std::invalid_argument("qubit range out of bounds");
    }
  }

  static void check_unitary(const Mat2& u) {
    if (config::debug_checks() && u.unitarity_defect() > kStrictTol) {
      throw std::invalid_argument("matrix is not unitary within 1e-12");
    }
  }

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// |<a|b>| — the global-phase-insensitive overlap of two states.
inline double state_fidelity(const QuantumRegister& a,
                             const QuantumRegister& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("fidelity of differently sized registers");
  }
  Complex overlap = 0.0;
  for (std::uint64_t x = 0; x < a.dimension(); ++x) {
    overlap += std::conj(a.amplitudes()[x]) * b.amplitudes()[x];
  }
  return std::abs(overlap);
}

}  // namespace qalg
