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
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/gates.hpp"
#include "qalg/phase_estimation.hpp"
#include "qalg/register.hpp"

namespace qalg {

// The Grover iterate G = -A U_0 A^{-1} U_f, where U_f flips the sign of
// solution states, U_0 flips the sign of |0...0>, and A prepares the
// starting superposition (the Hadamard transform unless overridden).
// On the plane spanned by the uniform solution state |X_1> and the
// uniform non-solution state |X_0>, G rotates with eigenvalues
// e^{+-2 pi i omega_j}, cos(2 pi omega_j) = 1 - 2j/N for j solutions out
// of N; off the plane it acts as -1 on solutions and +1 on the rest.
// Counting estimates omega_j by phase estimation; searching picks an
// iteration count that turns the kicked-back relative phase into
// constructive interference on |X_1>.

/// A pluggable state-preparation unitary acting on a qubit range.
struct StatePrep {
  std::function<void(QuantumRegister&, int offset, int bits)> apply;
  std::function<void(QuantumRegister&, int offset, int bits)> apply_inverse;

  static StatePrep hadamard_transform() {
    StatePrep prep;
    prep.apply = [](QuantumRegister& reg, int offset, int bits) {
      apply_hadamard_all(reg, offset, bits);
    };
    prep.apply_inverse = prep.apply;  // H is an involution
    return prep;
  }
};

/// One application of G to the qubits [offset, offset + f.domain_bits).
/// The trailing scalar -1 negates the whole register, which is a global
/// phase for a standalone register and the correct controlled phase when
/// run under QuantumRegister::apply_controlled. Counts one oracle call.
inline void grover_iterate(QuantumRegister& reg, const OracleFunction& f,
                           const StatePrep& prep, int offset = 0) {
  const int bits = f.domain_bits();
  if (offset < 0 || offset + bits > reg.n_qubits()) {
    throw std::invalid_argument("search register out of range");
  }
  const std::uint64_t mask = f.domain_size() - 1;
  f.note_gate_application();
  reg.apply_sign_flip(
      [&](BasisIndex x) { return f((x >> offset) & mask) == 1; });
  prep.apply_inverse(reg, offset, bits);
  reg.apply_sign_flip(
      [&](BasisIndex x) { return ((x >> offset) & mask) == 0; });
  prep.apply(reg, offset, bits);
  reg.apply_sign_flip([](BasisIndex) { return true; });
}

inline void grover_iterate(QuantumRegister& reg, const OracleFunction& f,
                           int offset = 0) {
  grover_iterate(reg, f, StatePrep::hadamard_transform(), offset);
}

/// Spectral data of G for j solutions in a space of size N.
struct GroverSpectrum {
  std::uint64_t search_space = 0;  ///< N
  std::uint64_t solutions = 0;     ///< j
  double omega = 0.0;  ///< e^{+-2 pi i omega} eigenvalues, omega in [0, 1/2]
  double theta = 0.0;  ///< A|0> = (e^{-2 pi i theta}|psi+> + e^{2 pi i theta}|psi->)/sqrt2
};

/// omega_j from cos(2 pi omega_j) = 1 - 2j/N, and theta_j computed from
/// the overlap of A|0> with the eigenvector (|X_1> + i|X_0>)/sqrt2 rather
/// than any assumed closed form. At j = 0 and j = N the rotation plane
/// collapses (eigenvalues +1 resp. -1); the endpoint values omega = 0 and
/// omega = 1/2 are still returned.
inline GroverSpectrum grover_spectrum(std::uint64_t N, std::uint64_t j) {
  if (N < 1) throw std::invalid_argument("search space must be non-empty");
  if (j > N) throw std::invalid_argument("solution count exceeds space size");
  const double ratio = static_cast<double>(j) / static_cast<double>(N);
  GroverSpectrum s;
  s.search_space = N;
  s.solutions = j;
  const double c = std::clamp(1.0 - 2.0 * ratio, -1.0, 1.0);
  s.omega = std::acos(c) / (2.0 * std::numbers::pi);
  // <psi+|A|0> = (sqrt(j/N) - i sqrt(1 - j/N))/sqrt2 = e^{-2 pi i theta}/sqrt2
  s.theta = std::atan2(std::sqrt(1.0 - ratio), std::sqrt(ratio)) /
            (2.0 * std::numbers::pi);
  return s;
}

/// Controlled-G^{2^j} device for phase estimation. There is no squaring
/// shortcut for powers of G: G^{2^j} costs 2^j controlled applications,
/// and the ledger charges accordingly.
inline ControlledPowerDevice grover_power_device(
    const OracleFunction& f,
    const StatePrep& prep = StatePrep::hadamard_transform()) {
  ControlledPowerDevice dev;
  dev.target_bits = f.domain_bits();
  dev.cost_model = ControlledPowerDevice::CostModel::kRepetition;
  dev.apply_power = [f, prep](QuantumRegister& reg, int control,
                              int target_offset, int j) {
    const std::uint64_t reps = std::uint64_t{1} << j;
    const int sub_offset = control < target_offset ? target_offset - 1
                                                   : target_offset;
    for (std::uint64_t r = 0; r < reps; ++r) {
      reg.apply_controlled(control, [&](QuantumRegister& sub) {
        grover_iterate(sub, f, prep, sub_offset);
      });
    }
  };
  return dev;
}

/// Outcome of approximate counting: the folded phase estimate, its
/// inversion j = N sin^2(pi omega), and the Grover-application cost.
struct CountingResult {
  double omega_estimate = 0.0;     ///< folded into [0, 1/2]
  double j_estimate = 0.0;         ///< N sin^2(pi omega_estimate)
  std::uint64_t j_rounded = 0;     ///< nearest integer, clamped to [0, N]
  std::uint64_t grover_applications = 0;
};

/// Folds a raw phase fraction into [0, 1/2]; +omega and -omega label the
/// same rotation and are measured with equal probability.
inline double fold_counting_phase(double omega_raw) {
  const double w = omega_raw - std::floor(omega_raw);
  return w <= 0.5 ? w : 1.0 - w;
}

/// Inverts cos(2 pi omega) = 1 - 2 j / N exactly: j = N sin^2(pi omega).
inline double solutions_from_phase(double omega, std::uint64_t N) {
  const double s = std::sin(std::numbers::pi * omega);
  return static_cast<double>(N) * s * s;
}

/// Phase-estimates omega_j from the starting state A|0> (any
/// superposition of the two rotation eigenvectors works) with t control
/// qubits, then inverts the estimate into a solution count.
inline CountingResult quantum_count(const OracleFunction& f, int t_bits,
                                    std::mt19937_64& rng,
                                    int max_precision = 16) {
  if (t_bits < 1 || t_bits > max_precision) {
    throw std::invalid_argument(
        "counting precision outside [1, " + std::to_string(max_precision) +
        "] (cost grows as 2^t)");
  }
  const int n = f.domain_bits();
  const std::uint64_t N = f.domain_size();
  const ControlledPowerDevice dev = grover_power_device(f);
  QuantumRegister start(n);
  apply_hadamard_all(start, 0, n);
  const PhaseEstimate est = estimate_phase(dev, start, t_bits, rng);

  CountingResult out;
  out.omega_estimate = fold_counting_phase(est.omega_hat);
  out.j_estimate = solutions_from_phase(out.omega_estimate, N);
  const double rounded = std::round(out.j_estimate);
  out.j_rounded = static_cast<std::uint64_t>(
      std::clamp(rounded, 0.0, static_cast<double>(N)));
  out.grover_applications = *dev.base_applications;
  return out;
}

/// Exact distribution of the counting measurement over the 2^t control
/// outcomes, for analysis without sampling.
inline std::vector<double> counting_distribution(const OracleFunction& f,
                                                 int t_bits) {
  const int n = f.domain_bits();
  const ControlledPowerDevice dev = grover_power_device(f);
  QuantumRegister start(n);
  apply_hadamard_all(start, 0, n);
  return exact_control_distribution(dev, start, t_bits);
}

/// Number of iterations maximizing |<X_1|G^k A|0>|^2 =
/// cos^2(2 pi (k omega - theta)): the integer k bringing k omega - theta
/// closest to an integer. Near j << N this is about (pi/4) sqrt(N/j).
/// Ties pick the smaller k (fewer oracle calls).
inline int grover_iteration_count(const GroverSpectrum& spectrum) {
  if (spectrum.solutions == 0) {
    throw std::invalid_argument("no solutions: iteration count undefined");
  }
  if (spectrum.solutions == spectrum.search_space) return 0;
  const auto miss = [&](double k) {
    const double x = k * spectrum.omega - spectrum.theta;
    return std::abs(x - std::round(x));
  };
  const double k0 = spectrum.theta / spectrum.omega;
  const double lo = std::max(0.0, std::floor(k0));
  const double hi = std::ceil(k0);
  if (miss(lo) <= miss(hi)) return static_cast<int>(lo);
  return static_cast<int>(hi);
}

struct GroverSearchResult {
  BasisIndex result = 0;            ///< verified solution index
  std::uint64_t solutions_assumed = 0;  ///< j used to pick the iteration count
  int iterations = 0;               ///< Grover iterations per attempt
  int attempts = 0;                 ///< attempts until verification passed
  bool counted = false;             ///< j came from a counting pre-pass
  std::uint64_t counting_applications = 0;
};

/// Runs Grover search: prepare A|0>, iterate G, measure, verify
/// classically, and retry with fresh randomness on a miss. With j
/// unknown, a counting pre-pass at ceil(n/2) + 2 precision qubits
/// estimates it first. Empty result means the retry budget ran out (or
/// the solution count was estimated to be zero).
inline std::optional<GroverSearchResult> grover_search(
    const OracleFunction& f, std::optional<std::uint64_t> j_known,
    std::mt19937_64& rng, int max_retries = 16) {
  const int n = f.domain_bits();
  const std::uint64_t N = f.domain_size();

  GroverSearchResult res;
  std::uint64_t j;
  if (j_known.has_value()) {
    if (*j_known > N) throw std::invalid_argument("solution count exceeds N");
    j = *j_known;
  } else {
    const int t = (n + 1) / 2 + 2;
    const CountingResult count = quantum_count(f, t, rng);
    res.counted = true;
    res.counting_applications = count.grover_applications;
    j = count.j_rounded;
  }
  res.solutions_assumed = j;
  if (j == 0) return std::nullopt;

  const int k = grover_iteration_count(grover_spectrum(N, j));
  res.iterations = k;
  const StatePrep prep = StatePrep::hadamard_transform();
  const auto all_qubits = qubit_range(0, n);
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    QuantumRegister reg(n);
    prep.apply(reg, 0, n);
    for (int i = 0; i < k; ++i) grover_iterate(reg, f, prep, 0);
    const MeasurementOutcome out = reg.measure_qubits(all_qubits, rng);
    if (f.eval_counted(out.result) == 1) {
      res.result = out.result;
      res.attempts = attempt;
      return res;
    }
  }
  return std::nullopt;
}

}  // namespace qalg
