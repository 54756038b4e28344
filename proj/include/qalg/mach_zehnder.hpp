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

#include "qalg/gates.hpp"
#include "qalg/register.hpp"

namespace qalg {

/// Detector probabilities at the two output ports of an interferometer.
struct DetectorProbabilities {
  double p0 = 0.0;
  double p1 = 0.0;
};

/// Simulates a Mach-Zehnder interferometer as the single-qubit network
/// H · diag(e^{i phi0}, e^{i phi1}) · H on |0>. The detector statistics
/// depend only on the difference of the phase-shifter settings:
/// P0 = cos^2((phi0 - phi1)/2), P1 = sin^2((phi0 - phi1)/2).
inline DetectorProbabilities mach_zehnder(double phi0, double phi1) {
  QuantumRegister reg(1);
  apply_hadamard(reg, 0);
  reg.apply_diagonal([&](BasisIndex x) { return x == 0 ? phi0 : phi1; });
  apply_hadamard(reg, 0);
  return {reg.probability_of_qubit(0, 0), reg.probability_of_qubit(0, 1)};
}

}  // namespace qalg
