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

// A short tour of the library: interference, one oracle query beating
// two classical ones, Fourier round trips, amplitude amplification, and
// factoring by order finding.

#include <cstdio>
#include <numbers>
#include <random>

#include "qalg/qalg.hpp"

int main() {
  using namespace qalg;

  std::printf("-- Mach-Zehnder interferometer --\n");
  for (double phi : {0.0, std::numbers::pi / 2.0, std::numbers::pi}) {
    const auto [p0, p1] = mach_zehnder(phi, 0.0);
    std::printf("  phase difference %.4f -> P0 = %.4f, P1 = %.4f\n", phi, p0,
                p1);
  }

  std::printf("\n-- Deutsch's algorithm (one oracle query) --\n");
  for (const char* table : {"00", "11", "01", "10"}) {
    const OracleFunction f = OracleFunction::from_bitstring(table);
    const DeutschVerdict v = deutsch(f);
    std::printf("  f = %s -> %s\n", table,
                v.verdict == DeutschVerdict::Kind::kConstant ? "constant"
                                                             : "balanced");
  }

  std::printf("\n-- QFT round trip on |x = 5>, 4 qubits --\n");
  QuantumRegister reg(4, 5);
  qft(reg, qubit_range(0, 4));
  std::printf("  after QFT: |amplitude(0)| = %.4f (uniform 1/4 expected)\n",
              std::abs(reg.amplitude(0)));
  inverse_qft(reg, qubit_range(0, 4));
  std::printf("  after inverse: P(5) = %.6f\n",
              reg.probability_of([](BasisIndex x) { return x == 5; }));

  std::printf("\n-- Grover search, 256 entries, one marked --\n");
  std::mt19937_64 rng(7);
  OracleFunction needle(8, 2,
                        [](std::uint64_t x) { return x == 142 ? 1u : 0u; });
  if (const auto hit = grover_search(needle, 1, rng)) {
    std::printf("  found %llu after %d iterations (%llu oracle calls)\n",
                static_cast<unsigned long long>(hit->result), hit->iterations,
                static_cast<unsigned long long>(needle.calls()));
  }

  std::printf("\n-- Shor factoring of 35 --\n");
  std::mt19937_64 factoring_rng(1);
  ShorFactorStats stats;
  const Factorization f = shor_factor(35, factoring_rng, 20, &stats);
  std::printf("  35 =");
  for (const auto& [p, e] : f.prime_powers) {
    std::printf(" %llu^%d", static_cast<unsigned long long>(p), e);
  }
  std::printf("  (%d quantum order-finding runs, %d-qubit registers)\n",
              stats.order_runs, stats.max_register_qubits);
  return 0;
}
