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
#include <numbers>
#include <stdexcept>

#include "qalg/gates.hpp"
#include "qalg/register.hpp"

namespace qalg {

/// Classification of a one-bit Boolean function from a single oracle
/// evaluation. The verdict is Constant exactly when the measured bit is 0.
struct DeutschVerdict {
  enum class Kind { kConstant, kBalanced };
  Kind verdict = Kind::kConstant;
  int measured_bit = 0;
};

/// Deutsch's algorithm: the input qubit is Hadamarded, one
/// f-controlled-NOT against the (|0> - |1>)/sqrt2 target kicks the phase
/// (-1)^{f(x)} onto each branch, and a final Hadamard interferes the
/// branches into |f(0) xor f(1)>. Deterministic — the first qubit holds
/// the answer with probability 1, so no sampling is needed. The final
/// two-qubit state (including the (-1)^{f(0)} global phase) is written
/// to `final_state` when requested.
inline DeutschVerdict deutsch(const OracleFunction& f,
                              QuantumRegister* final_state = nullptr) {
  if (f.domain_bits() != 1 || f.codomain_modulus() != 2) {
    throw std::invalid_argument("Deutsch needs a 1-bit Boolean oracle");
  }
  // Qubit 0 carries the input x, qubit 1 the target in (|0> - |1>)/sqrt2.
  const double s = 1.0 / std::numbers::sqrt2;
  QuantumRegister reg(2);
  reg.set_amplitude(0b00, Complex{s, 0.0});
  reg.set_amplitude(0b10, Complex{-s, 0.0});
  apply_hadamard(reg, 0);
  apply_f_controlled_not(reg, f, 0, 1);  // the single oracle evaluation
  apply_hadamard(reg, 0);

  DeutschVerdict v;
  v.measured_bit = reg.probability_of_qubit(0, 1) > 0.5 ? 1 : 0;
  v.verdict = v.measured_bit == 1 ? DeutschVerdict::Kind::kBalanced
                                  : DeutschVerdict::Kind::kConstant;
  if (final_state != nullptr) *final_state = reg;
  return v;
}

}  // namespace qalg
