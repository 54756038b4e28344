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

#include <atomic>
#include <complex>
#include <cstdint>
#include <random>

namespace qalg {

using Complex = std::complex<double>;

/// Index into the computational basis of an n-qubit register.
/// Bit i of the value is the logical value of qubit i, so an index
/// encodes x = sum_i x_i * 2^i.
using BasisIndex = std::uint64_t;

/// Default tolerance for state and probability comparisons.
inline constexpr double kComparisonTol = 1e-9;
/// Strict tolerance for element-wise amplitude checks.
inline constexpr double kStrictTol = 1e-12;

namespace config {

inline std::atomic<int>& max_qubits_ref() {
  static std::atomic<int> value{24};
  return value;
}

inline std::atomic<bool>& debug_checks_ref() {
  static std::atomic<bool> value{false};
  return value;
}

/// Largest register the library will allocate (2^n complex doubles).
inline int max_qubits() { return max_qubits_ref().load(); }
inline void set_max_qubits(int n) { max_qubits_ref().store(n); }

/// When enabled, gate appliers run extra validity checks (unitarity of
/// 2x2 inputs, bijectivity of permutations).
inline bool debug_checks() { return debug_checks_ref().load(); }
inline void set_debug_checks(bool on) { debug_checks_ref().store(on); }

}  // namespace config

/// One uniform double in [0, 1) with 53 random mantissa bits. Used instead
/// of std::uniform_real_distribution so that a seed determines identical
/// samples on every platform.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound). bound must be nonzero.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace qalg
