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

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/register.hpp"

namespace qalg {

/// The basis-mixing gate (1/sqrt2)[[1,1],[1,-1]]; quantum analogue of a
/// 50/50 beam-splitter.
inline Mat2 hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s, s, s, -s};
}

/// diag(1, e^{i phi}): |x> -> e^{i x phi}|x>.
inline Mat2 phase_shift(double phi) {
  return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}

inline void apply_hadamard(QuantumRegister& reg, int qubit) {
  reg.apply_single_qubit(qubit, hadamard());
}

inline void apply_hadamard_all(QuantumRegister& reg, int offset, int bits) {
  for (int q = offset; q < offset + bits; ++q) apply_hadamard(reg, q);
}

/// Diagonal of a two-qubit gate, indexed by bit(qubit_a) | bit(qubit_b)<<1.
using Diag4 = std::array<Complex, 4>;

/// The conditional phase shift R(phi): |x>|y> -> e^{i x y phi}|x>|y>.
/// Diagonal and symmetric under exchanging the two qubits.
inline Diag4 conditional_phase(double phi) {
  return {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0},
          std::polar(1.0, phi)};
}

inline void apply_two_qubit_diagonal(QuantumRegister& reg, int qubit_a,
                                     int qubit_b, const Diag4& d) {
  if (qubit_a == qubit_b) throw std::invalid_argument("qubits must differ");
  const std::uint64_t abit = std::uint64_t{1} << qubit_a;
  const std::uint64_t bbit = std::uint64_t{1} << qubit_b;
  for (std::uint64_t x = 0; x < reg.dimension(); ++x) {
    const int idx = ((x & abit) ? 1 : 0) | ((x & bbit) ? 2 : 0);
    if (idx != 0) reg.set_amplitude(x, reg.amplitude(x) * d[idx]);
  }
}

inline void apply_conditional_phase(QuantumRegister& reg, int qubit_a,
                                    int qubit_b, double phi) {
  apply_two_qubit_diagonal(reg, qubit_a, qubit_b, conditional_phase(phi));
}

/// A black-box classical function wrapped for quantum evaluation.
///
/// Outputs must land in [0, codomain_modulus) and the function must be
/// pure: the same x always yields the same value. The call ledger counts
/// oracle uses the way query complexity does — one per quantum gate
/// application and one per counted classical evaluation — not one per
/// basis index touched inside a kernel. Copies share the ledger.
class OracleFunction {
 public:
  OracleFunction(int domain_bits, std::uint64_t codomain_modulus,
                 std::function<std::uint64_t(std::uint64_t)> fn)
      : domain_bits_(domain_bits),
        modulus_(codomain_modulus),
        fn_(std::move(fn)),
        calls_(std::make_shared<std::uint64_t>(0)) {
    if (domain_bits < 1 || domain_bits > 62) {
      throw std::invalid_argument("oracle domain bits out of range");
    }
    if (codomain_modulus < 2) {
      throw std::invalid_argument("oracle codomain modulus must be >= 2");
    }
  }

  /// Truth table oracle; table size must be a power of two.
  static OracleFunction from_table(std::vector<std::uint64_t> table,
                                   std::uint64_t codomain_modulus) {
    if (table.empty() || (table.size() & (table.size() - 1)) != 0) {
      throw std::invalid_argument("table size must be a power of two");
    }
    int bits = 0;
    while ((std::size_t{1} << bits) < table.size()) ++bits;
    auto shared = std::make_shared<std::vector<std::uint64_t>>(std::move(table));
    return OracleFunction(
        bits, codomain_modulus,
        [shared](std::uint64_t x) { return (*shared)[x]; });
  }

  /// Boolean oracle from a '0'/'1' string: character i is f(i).
  static OracleFunction from_bitstring(const std::string& bits) {
    std::vector<std::uint64_t> table;
    table.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("truth table must contain only 0 and 1");
      }
      table.push_back(c == '1' ? 1 : 0);
    }
    return from_table(std::move(table), 2);
  }

  /// Uncounted evaluation (used inside gate kernels).
  std::uint64_t operator()(std::uint64_t x) const {
    const std::uint64_t v = fn_(x);
    if (v >= modulus_) {
      throw std::domain_error("oracle output outside its codomain");
    }
    return v;
  }

  /// Classical query: evaluates f(x) and charges the ledger.
  std::uint64_t eval_counted(std::uint64_t x) const {
    ++*calls_;
    return (*this)(x);
  }

  /// Charges one quantum application of the oracle gate.
  void note_gate_application() const { ++*calls_; }

  std::uint64_t calls() const { return *calls_; }
  void reset_calls() const { *calls_ = 0; }

  int domain_bits() const { return domain_bits_; }
  std::uint64_t domain_size() const {
    return std::uint64_t{1} << domain_bits_;
  }
  std::uint64_t codomain_modulus() const { return modulus_; }

 private:
  int domain_bits_;
  std::uint64_t modulus_;
  std::function<std::uint64_t(std::uint64_t)> fn_;
  std::shared_ptr<std::uint64_t> calls_;
};

/// f-controlled-NOT: |x>|y> -> |x>|y xor f(x)> for Boolean f. The input
/// register sits at qubits [x_offset, x_offset + f.domain_bits), the
/// output bit at y_qubit. Self-inverse. Counts one oracle application.
inline void apply_f_controlled_not(QuantumRegister& reg,
                                   const OracleFunction& f, int x_offset,
                                   int y_qubit) {
  if (f.codomain_modulus() != 2) {
    throw std::invalid_argument("f-controlled-NOT needs a Boolean oracle");
  }
  if (y_qubit >= x_offset && y_qubit < x_offset + f.domain_bits()) {
    throw std::invalid_argument("output qubit overlaps oracle input qubits");
  }
  f.note_gate_application();
  const std::uint64_t xmask = f.domain_size() - 1;
  const std::uint64_t ybit = std::uint64_t{1} << y_qubit;
  for (std::uint64_t i = 0; i < reg.dimension(); ++i) {
    if (i & ybit) continue;
    const std::uint64_t x = (i >> x_offset) & xmask;
    if (f(x) == 1) {
      const Complex a = reg.amplitude(i);
      reg.set_amplitude(i, reg.amplitude(i | ybit));
      reg.set_amplitude(i | ybit, a);
    }
  }
}

/// Register-valued controlled evaluation: |x>|y> -> |x>|y + f(x) mod 2^m>.
/// With m = 1 this reduces to the f-controlled-NOT. On the target
/// eigenstate sum_y e^{-2 pi i y / 2^m}|y> each branch x picks up the
/// phase e^{2 pi i f(x) / 2^m}. Counts one oracle application.
inline void apply_f_controlled_add(QuantumRegister& reg,
                                   const OracleFunction& f, int x_offset,
                                   int y_offset, int m_bits) {
  if (m_bits < 1) throw std::invalid_argument("target register is empty");
  if (f.codomain_modulus() > (std::uint64_t{1} << m_bits)) {
    throw std::invalid_argument("oracle codomain exceeds target register");
  }
  const int x_end = x_offset + f.domain_bits();
  if (x_offset < y_offset + m_bits && y_offset < x_end) {
    throw std::invalid_argument("oracle input and output registers overlap");
  }
  f.note_gate_application();
  const std::uint64_t xmask = f.domain_size() - 1;
  const std::uint64_t ymask = (std::uint64_t{1} << m_bits) - 1;
  reg.apply_permutation([&](BasisIndex i) {
    const std::uint64_t x = (i >> x_offset) & xmask;
    const std::uint64_t y = (i >> y_offset) & ymask;
    const std::uint64_t y2 = (y + f(x)) & ymask;
    return (i & ~(ymask << y_offset)) | (y2 << y_offset);
  });
}

/// The permutation x -> a*x mod N on [0, N), completed with the identity
/// on [N, 2^width) so the whole map stays a bijection. Requires
/// gcd(a, N) = 1 and N <= 2^width.
inline std::function<BasisIndex(BasisIndex)> modular_mult_gate(
    std::uint64_t a, std::uint64_t N, int width) {
  if (N < 1 || width < 1 || width > 62 ||
      N > (std::uint64_t{1} << width)) {
    throw std::invalid_argument("modulus does not fit the register width");
  }
  if (std::gcd(a % N == 0 ? N : a % N, N) != 1) {
    throw std::invalid_argument("multiplier must be coprime to the modulus");
  }
  const std::uint64_t ar = a % N;
  return [ar, N](BasisIndex x) -> BasisIndex {
    if (x >= N) return x;
    return static_cast<BasisIndex>(
        (static_cast<unsigned __int128>(ar) * x) % N);
  };
}

/// The 1-qubit eigenstate (|0> - |1>)/sqrt2 of y -> y xor b, eigenvalue
/// (-1)^b.
inline QuantumRegister minus_state() {
  const double s = 1.0 / std::numbers::sqrt2;
  return QuantumRegister::from_amplitudes({Complex{s, 0.0}, Complex{-s, 0.0}});
}

/// The m-qubit eigenstate (1/sqrt{2^m}) sum_y e^{-2 pi i y/2^m}|y> of
/// addition mod 2^m; adding c multiplies it by e^{2 pi i c/2^m}.
inline QuantumRegister addition_eigenstate(int m_bits) {
  if (m_bits < 1) throw std::invalid_argument("need at least one qubit");
  const std::uint64_t dim = std::uint64_t{1} << m_bits;
  std::vector<Complex> amps(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::uint64_t y = 0; y < dim; ++y) {
    amps[y] = std::polar(scale, -2.0 * std::numbers::pi *
                                    static_cast<double>(y) /
                                    static_cast<double>(dim));
  }
  return QuantumRegister::from_amplitudes(std::move(amps));
}

}  // namespace qalg
