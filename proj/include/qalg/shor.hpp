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
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/number_theory.hpp"
#include "qalg/phase_estimation.hpp"
#include "qalg/register.hpp"

namespace qalg {

// Order finding as phase estimation. U_a : |x> -> |a x mod N> has
// eigenvalues e^{2 pi i k/r} where r is the order of a, and |1> is the
// uniform sum of all r eigenvectors, so preparing the target in |1> and
// estimating the phase yields a random k/r. Continued fractions recover
// the denominator; factoring then splits N via gcd(a^{r/2} +- 1, N).

/// Number of qubits needed to hold residues mod N.
inline int order_target_bits(u64 N) {
  if (N < 2) throw std::invalid_argument("modulus must be at least 2");
  return static_cast<int>(std::bit_width(N - 1));
}

/// Default control-register width: 2 ceil(log2 N) + 1 qubits, enough for
/// the 1/(2 N^2) continued-fraction resolution.
inline int default_order_precision(u64 N) {
  return 2 * order_target_bits(N) + 1;
}

/// Diagnostics of one order-finding run.
struct OrderFindingRun {
  u64 measured_y = 0;
  int control_bits = 0;
  int target_bits = 0;
  std::optional<Fraction> convergent;
  std::uint64_t controlled_gate_applications = 0;
};

namespace detail {

/// Shrinks a verified multiple of the order (a^m = 1 mod N) to the order
/// itself by dividing out prime factors while the power stays 1.
inline u64 reduce_to_order(u64 a, u64 multiple, u64 N) {
  u64 d = multiple;
  u64 rest = multiple;
  for (u64 p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (d % p == 0 && mod_pow(a, d / p, N) == 1) d /= p;
  }
  if (rest > 1) {
    while (d % rest == 0 && mod_pow(a, d / rest, N) == 1) d /= rest;
  }
  return d;
}

}  // namespace detail

/// One quantum order-finding attempt for a mod N. Runs phase estimation
/// with the target prepared in |1>, matches the measured y/2^m to a
/// fraction k/r by continued fractions, and verifies candidate orders
/// classically, trying small multiples of the denominator in case the
/// measured k shared a factor with r. Empty means this run failed and
/// the caller should retry (deliberately no cross-run combining, so the
/// per-run statistics stay meaningful).
inline std::optional<u64> shor_order(u64 a, u64 N,
                                     std::optional<int> precision_bits,
                                     std::mt19937_64& rng,
                                     OrderFindingRun* run = nullptr) {
  if (N < 2) throw std::invalid_argument("modulus must be at least 2");
  a %= N;
  if (a == 0 || gcd(a, N) != 1) {
    throw std::invalid_argument("base must be coprime to the modulus");
  }
  const int t = order_target_bits(N);
  const int m = precision_bits.value_or(default_order_precision(N));
  if (m < 1) throw std::invalid_argument("precision must be positive");
  if (run != nullptr) {
    *run = OrderFindingRun{};
    run->control_bits = m;
    run->target_bits = t;
  }
  if (a == 1) {
    // Order 1: the phase distribution is a delta at 0.
    if (run != nullptr) run->convergent = Fraction{0, 1};
    return 1;
  }

  const ControlledPowerDevice dev = modular_power_device(a, N, t);
  const QuantumRegister eigen(t, 1);
  const PhaseEstimate est = estimate_phase(dev, eigen, m, rng);
  const std::optional<Fraction> frac = continued_fraction_match(est.y, m, N);
  if (run != nullptr) {
    run->measured_y = est.y;
    run->convergent = frac;
    run->controlled_gate_applications = *dev.base_applications;
  }
  if (!frac.has_value()) return std::nullopt;

  for (u64 c = 1; c <= 3; ++c) {
    const u64 candidate = frac->denominator * c;
    if (mod_pow(a, candidate, N) == 1) {
      return detail::reduce_to_order(a, candidate, N);
    }
  }
  return std::nullopt;
}

/// Derives candidate orders for every possible measurement outcome and
/// sums the probability mass of the outcomes that recover the true
/// order — the exact per-run success probability of shor_order.
inline double order_success_probability(u64 a, u64 N, int precision_bits) {
  const int t = order_target_bits(N);
  const u64 true_order = multiplicative_order(a, N);
  const ControlledPowerDevice dev = modular_power_device(a, N, t);
  const QuantumRegister eigen(t, 1);
  const std::vector<double> dist =
      exact_control_distribution(dev, eigen, precision_bits);
  double success = 0.0;
  for (u64 y = 0; y < dist.size(); ++y) {
    if (dist[y] <= 0.0) continue;
    const auto frac = continued_fraction_match(y, precision_bits, N);
    if (!frac.has_value()) continue;
    for (u64 c = 1; c <= 3; ++c) {
      const u64 candidate = frac->denominator * c;
      if (mod_pow(a, candidate, N) == 1) {
        if (detail::reduce_to_order(a, candidate, N) == true_order) {
          success += dist[y];
        }
        break;
      }
    }
  }
  return success;
}

struct ShorFactorStats {
  int order_runs = 0;
  int splittings = 0;
  std::uint64_t controlled_gate_applications = 0;
  int max_register_qubits = 0;
};

/// Full factoring pipeline: strip prime powers and even parts
/// classically, take the gcd shortcut when the random base already
/// shares a factor, otherwise run quantum order finding and split via
/// gcd(a^{r/2} +- 1, N). Recurses on both halves; at most log2 N
/// splittings. Throws when a composite resists max_attempts rounds.
inline Factorization shor_factor(u64 N, std::mt19937_64& rng,
                                 int max_attempts = 20,
                                 ShorFactorStats* stats = nullptr) {
  if (N < 1) throw std::invalid_argument("nothing to factor");
  Factorization out;
  if (N == 1) return out;
  if (is_prime(N)) {
    out.multiply_in(N, 1);
    return out;
  }
  if (const auto pp = is_prime_power(N)) {
    out.multiply_in(pp->first, pp->second);
    return out;
  }
  if (N % 2 == 0) {
    int twos = 0;
    u64 odd = N;
    while (odd % 2 == 0) {
      odd /= 2;
      ++twos;
    }
    out.multiply_in(2, twos);
    out.merge(shor_factor(odd, rng, max_attempts, stats));
    return out;
  }

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const u64 a = 2 + uniform_below(rng, N - 2);
    const u64 g = gcd(a, N);
    if (g != 1) {
      if (stats != nullptr) ++stats->splittings;
      out = shor_factor(g, rng, max_attempts, stats);
      out.merge(shor_factor(N / g, rng, max_attempts, stats));
      return out;
    }
    OrderFindingRun run;
    const std::optional<u64> r = shor_order(a, N, std::nullopt, rng, &run);
    if (stats != nullptr) {
      ++stats->order_runs;
      stats->controlled_gate_applications += run.controlled_gate_applications;
      stats->max_register_qubits = std::max(
          stats->max_register_qubits, run.control_bits + run.target_bits);
    }
    if (!r.has_value()) continue;
    const auto split = split_from_order(a, *r, N);
    if (!split.has_value()) continue;
    if (stats != nullptr) ++stats->splittings;
    out = shor_factor(split->first, rng, max_attempts, stats);
    out.merge(shor_factor(split->second, rng, max_attempts, stats));
    return out;
  }
  throw std::runtime_error("factoring attempts exhausted for " +
                           std::to_string(N));
}

}  // namespace qalg
