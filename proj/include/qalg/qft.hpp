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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/gates.hpp"
#include "qalg/register.hpp"

namespace qalg {

// The quantum Fourier transform on s = 2^n amplitudes,
//
//   |x>  ->  (1/sqrt s) sum_y e^{2 pi i x y / s} |y>,
//
// realized as the standard ladder of Hadamards and conditional phase
// rotations R(pi/2^k), followed by one index-level bit reversal of the
// transformed qubits. Without the reversal the ladder leaves output bit
// j on wire n-1-j; the reversal is an O(2^n) amplitude remap, not a
// round of swap gates.

/// One gate of the QFT ladder. control < 0 marks a Hadamard on `target`;
/// otherwise the gate is a conditional phase R(pi / 2^angle_exponent)
/// between `target` and `control` (symmetric, so the names are nominal).
struct QftGate {
  int target;
  int control;
  int angle_exponent;
};

/// The gate sequence of the exact transform on the listed wires:
/// n Hadamards and n(n-1)/2 conditional phases. Wire k ends the ladder
/// holding output bit n-1-k.
inline std::vector<QftGate> qft_network(std::span<const int> qubits) {
  const int n = static_cast<int>(qubits.size());
  std::vector<QftGate> gates;
  gates.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int k = n - 1; k >= 0; --k) {
    gates.push_back({qubits[k], -1, 0});
    for (int d = 1; d <= k; ++d) {
      gates.push_back({qubits[k], qubits[k - d], d});
    }
  }
  return gates;
}

namespace detail {

inline void check_distinct(std::span<const int> qubits) {
  if (qubits.empty()) throw std::invalid_argument("no qubits listed");
  std::set<int> s(qubits.begin(), qubits.end());
  if (s.size() != qubits.size()) {
    throw std::invalid_argument("duplicate qubits in transform list");
  }
}

// Conditional rotation angles come from the exact integer exponent;
// they are never accumulated by repeated floating-point addition.
inline double rotation_angle(int exponent) {
  return std::numbers::pi / static_cast<double>(std::uint64_t{1} << exponent);
}

inline void run_network(QuantumRegister& reg, std::span<const QftGate> gates,
                        bool inverse) {
  const auto apply_one = [&](const QftGate& g) {
    if (g.control < 0) {
      apply_hadamard(reg, g.target);
    } else {
      const double phi = rotation_angle(g.angle_exponent);
      apply_conditional_phase(reg, g.target, g.control, inverse ? -phi : phi);
    }
  };
  if (inverse) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_one(*it);
  } else {
    for (const QftGate& g : gates) apply_one(g);
  }
}

}  // namespace detail

/// Reverses the values of the listed qubits (qubits[i] <-> qubits[n-1-i])
/// by relabeling basis indices.
inline void apply_bit_reversal(QuantumRegister& reg,
                               std::span<const int> qubits) {
  const int n = static_cast<int>(qubits.size());
  std::uint64_t listed = 0;
  for (int q : qubits) listed |= std::uint64_t{1} << q;
  reg.apply_permutation([&](BasisIndex x) {
    BasisIndex y = x & ~listed;
    for (int i = 0; i < n; ++i) {
      if (x & (std::uint64_t{1} << qubits[i])) {
        y |= std::uint64_t{1} << qubits[n - 1 - i];
      }
    }
    return y;
  });
}

/// The ladder alone, without the final bit reversal: output bit j of the
/// transform lands on wire n-1-j. Basis input x leaves wire k in the
/// product-state factor |0> + e^{2 pi i x / 2^{k+1}} |1>.
inline void qft_no_reversal(QuantumRegister& reg,
                            std::span<const int> qubits) {
  detail::check_distinct(qubits);
  detail::run_network(reg, qft_network(qubits), false);
}

/// The exact transform over the listed qubits (bit i of the transformed
/// index lives on qubits[i]).
inline void qft(QuantumRegister& reg, std::span<const int> qubits) {
  qft_no_reversal(reg, qubits);
  apply_bit_reversal(reg, qubits);
}

/// Inverse transform: inverse_qft(qft(state)) = state.
inline void inverse_qft(QuantumRegister& reg, std::span<const int> qubits) {
  detail::check_distinct(qubits);
  apply_bit_reversal(reg, qubits);
  detail::run_network(reg, qft_network(qubits), true);
}

/// The same network with every rotation R(pi/2^k), k > min_angle_exponent,
/// omitted. min_angle_exponent = 0 degenerates to Hadamards only;
/// min_angle_exponent >= n-1 is the exact transform.
inline void approximate_qft(QuantumRegister& reg, std::span<const int> qubits,
                            int min_angle_exponent) {
  if (min_angle_exponent < 0) {
    throw std::invalid_argument("rotation cutoff must be non-negative");
  }
  detail::check_distinct(qubits);
  std::vector<QftGate> gates;
  for (const QftGate& g : qft_network(qubits)) {
    if (g.control < 0 || g.angle_exponent <= min_angle_exponent) {
      gates.push_back(g);
    }
  }
  detail::run_network(reg, gates, false);
  apply_bit_reversal(reg, qubits);
}

/// Classical O(s^2) discrete Fourier transform,
/// out[y] = (1/sqrt s) sum_x e^{2 pi i x y / s} in[x] — the dense
/// reference the circuit is tested against. s must be a power of two.
inline std::vector<Complex> dft_reference(std::span<const Complex> in) {
  const std::size_t s = in.size();
  if (s == 0 || (s & (s - 1)) != 0) {
    throw std::invalid_argument("input length must be a power of two");
  }
  std::vector<Complex> out(s, Complex{0.0, 0.0});
  const double scale = 1.0 / std::sqrt(static_cast<double>(s));
  for (std::size_t y = 0; y < s; ++y) {
    Complex acc = 0.0;
    for (std::size_t x = 0; x < s; ++x) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((x * y) % s) /
                           static_cast<double>(s);
      acc += in[x] * std::polar(1.0, angle);
    }
    out[y] = acc * scale;
  }
  return out;
}

/// Convenience: the first n qubits, in index order.
inline std::vector<int> qubit_range(int offset, int bits) {
  std::vector<int> qs(bits);
  for (int i = 0; i < bits; ++i) qs[i] = offset + i;
  return qs;
}

}  // namespace qalg
