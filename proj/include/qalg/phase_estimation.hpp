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
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/gates.hpp"
#include "qalg/number_theory.hpp"
#include "qalg/qft.hpp"
#include "qalg/register.hpp"

namespace qalg {

// Phase estimation: given controlled-U^{2^j} devices and a preparation of
// an eigenvector of U (eigenvalue e^{2 pi i omega}), Hadamards on n
// control qubits, a ladder of controlled powers, and an inverse QFT turn
// the kicked-back phases into an n-bit estimate of omega. Control qubit j
// drives U^{2^j} and carries bit j of the estimate; the target register
// sits above the controls.

/// A family of controlled-U^{2^j} gates. `apply_power(reg, c, off, j)`
/// applies U^{2^j} to the target qubits [off, off + target_bits)
/// conditioned on qubit c. cost_model records whether the power 2^j is
/// obtained by squaring (one gate regardless of j, as in modular
/// multiplication) or by 2^j literal repetitions (as for the Grover
/// iterate, which has no squaring shortcut); `base_applications` tallies
/// the total cost accordingly.
struct ControlledPowerDevice {
  enum class CostModel { kSquaring, kRepetition };

  int target_bits = 1;
  CostModel cost_model = CostModel::kSquaring;
  std::function<void(QuantumRegister&, int, int, int)> apply_power;
  std::shared_ptr<std::uint64_t> base_applications =
      std::make_shared<std::uint64_t>(0);

  void run(QuantumRegister& reg, int control, int target_offset,
           int j) const {
    apply_power(reg, control, target_offset, j);
    *base_applications +=
        cost_model == CostModel::kRepetition ? (std::uint64_t{1} << j) : 1;
  }
};

/// n-bit estimate of a phase fraction omega (eigenvalue e^{2 pi i omega}).
struct PhaseEstimate {
  std::uint64_t y = 0;        ///< measured index in [0, 2^n)
  double omega_hat = 0.0;     ///< y / 2^n
  int n_bits = 0;
  std::optional<double> success_probability;  ///< exact, when analytic
};

/// Device for U = phase_shift(2 pi omega) acting on one qubit; |1> is the
/// eigenstate with eigenvalue e^{2 pi i omega}. Powers are exact: the
/// rotation angle of U^{2^j} is computed from omega * 2^j directly.
inline ControlledPowerDevice phase_power_device(double omega) {
  ControlledPowerDevice dev;
  dev.target_bits = 1;
  dev.cost_model = ControlledPowerDevice::CostModel::kSquaring;
  dev.apply_power = [omega](QuantumRegister& reg, int control,
                            int target_offset, int j) {
    const double turns = omega * static_cast<double>(std::uint64_t{1} << j);
    const double frac = turns - std::floor(turns);
    reg.apply_controlled_single_qubit(
        control, target_offset, phase_shift(2.0 * std::numbers::pi * frac));
  };
  return dev;
}

/// Device for an arbitrary single-qubit U; U^{2^j} is built by j matrix
/// squarings.
inline ControlledPowerDevice single_qubit_power_device(const Mat2& u) {
  ControlledPowerDevice dev;
  dev.target_bits = 1;
  dev.cost_model = ControlledPowerDevice::CostModel::kSquaring;
  dev.apply_power = [u](QuantumRegister& reg, int control, int target_offset,
                        int j) {
    Mat2 pow = u;
    for (int i = 0; i < j; ++i) pow = pow * pow;
    reg.apply_controlled_single_qubit(control, target_offset, pow);
  };
  return dev;
}

/// Device for U_a : |x> -> |a x mod N>. U_a^{2^j} = U_{a^{2^j} mod N}, so
/// each power is a single multiplication gate whose multiplier comes from
/// exact repeated squaring.
inline ControlledPowerDevice modular_power_device(u64 a, u64 N, int width) {
  if (N > (u64{1} << width)) {
    throw std::invalid_argument("modulus does not fit the target register");
  }
  ControlledPowerDevice dev;
  dev.target_bits = width;
  dev.cost_model = ControlledPowerDevice::CostModel::kSquaring;
  dev.apply_power = [a, N, width](QuantumRegister& reg, int control,
                                  int target_offset, int j) {
    const u64 b = mod_pow(a, u64{1} << j, N);
    reg.apply_controlled_permutation(control, target_offset, width,
                                     modular_mult_gate(b, N, width));
  };
  return dev;
}

/// The n-qubit kick-back state: qubit k in (|0> + e^{i 2^k phi}|1>)/sqrt2,
/// i.e. amplitude e^{i phi y} / sqrt{2^n} on |y>. For phi = 2 pi x / 2^n
/// this is exactly the QFT of |x>.
inline QuantumRegister kickback_state(int n_bits, double phi) {
  if (n_bits < 1) throw std::invalid_argument("need at least one qubit");
  const std::uint64_t dim = std::uint64_t{1} << n_bits;
  std::vector<Complex> amps(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::uint64_t y = 0; y < dim; ++y) {
    amps[y] = std::polar(scale, phi * static_cast<double>(y));
  }
  return QuantumRegister::from_amplitudes(std::move(amps));
}

namespace detail {

/// Runs the estimation network (no measurement): controls at [0, n),
/// target at [n, n + device.target_bits) prepared in `eigenstate`.
inline QuantumRegister run_estimation_network(
    const ControlledPowerDevice& device, const QuantumRegister& eigenstate,
    int n_bits) {
  if (n_bits < 1) throw std::invalid_argument("need at least one estimate bit");
  if (eigenstate.n_qubits() != device.target_bits) {
    throw std::invalid_argument("eigenstate size does not match device");
  }
  const int total = n_bits + device.target_bits;
  if (total > config::max_qubits()) {
    throw std::invalid_argument(
        "estimation register of " + std::to_string(total) +
        " qubits exceeds the configured maximum of " +
        std::to_string(config::max_qubits()));
  }
  QuantumRegister reg(total);
  reg.set_amplitude(0, Complex{0.0, 0.0});
  for (std::uint64_t s = 0; s < eigenstate.dimension(); ++s) {
    reg.set_amplitude(s << n_bits, eigenstate.amplitudes()[s]);
  }
  apply_hadamard_all(reg, 0, n_bits);
  for (int j = 0; j < n_bits; ++j) device.run(reg, j, n_bits, j);
  const auto controls = qubit_range(0, n_bits);
  inverse_qft(reg, controls);
  return reg;
}

}  // namespace detail

/// One run of the estimation network followed by a measurement of the
/// control register. When the preparation is a single eigenvector the
/// target register leaves the network in that same eigenvector (the
/// kick-back touches only the controls); `post` receives the collapsed
/// final register if non-null.
inline PhaseEstimate estimate_phase(const ControlledPowerDevice& device,
                                    const QuantumRegister& eigenstate,
                                    int n_bits, std::mt19937_64& rng,
                                    QuantumRegister* post = nullptr) {
  QuantumRegister reg =
      detail::run_estimation_network(device, eigenstate, n_bits);
  const auto controls = qubit_range(0, n_bits);
  const MeasurementOutcome out = reg.measure_qubits(controls, rng);
  if (post != nullptr) *post = reg;
  PhaseEstimate est;
  est.y = out.result;
  est.n_bits = n_bits;
  est.omega_hat = static_cast<double>(out.result) /
                  static_cast<double>(std::uint64_t{1} << n_bits);
  return est;
}

/// The exact distribution over control-register outcomes y — the marginal
/// of the pre-measurement state. For a preparation sum_k c_k |psi_k> this
/// equals sum_k |c_k|^2 * (distribution for psi_k alone).
inline std::vector<double> exact_control_distribution(
    const ControlledPowerDevice& device, const QuantumRegister& eigenstate,
    int n_bits) {
  QuantumRegister reg =
      detail::run_estimation_network(device, eigenstate, n_bits);
  const std::uint64_t ys = std::uint64_t{1} << n_bits;
  const std::uint64_t targets = std::uint64_t{1} << device.target_bits;
  std::vector<double> dist(ys, 0.0);
  for (std::uint64_t s = 0; s < targets; ++s) {
    for (std::uint64_t y = 0; y < ys; ++y) {
      dist[y] += std::norm(reg.amplitudes()[(s << n_bits) | y]);
    }
  }
  return dist;
}

/// Exact closed-form outcome distribution for a single eigenvector with
/// eigenvalue e^{i phi}:
///   p(y) = |(1/2^n) sum_x e^{i x (phi - 2 pi y / 2^n)}|^2
///        = sin^2(2^{n-1} D) / (4^n sin^2(D/2)),  D = phi - 2 pi y / 2^n.
/// Invariant under phi -> phi + 2 pi.
inline std::vector<double> exact_output_distribution(double phi, int n_bits) {
  if (n_bits < 1 || n_bits > 30) {
    throw std::invalid_argument("bit count out of range");
  }
  const std::uint64_t s = std::uint64_t{1} << n_bits;
  const double sd = static_cast<double>(s);
  std::vector<double> dist(s);
  for (std::uint64_t y = 0; y < s; ++y) {
    const double delta =
        phi - 2.0 * std::numbers::pi * static_cast<double>(y) / sd;
    const double t = 0.5 * delta;
    const double denom = std::sin(t);
    if (std::abs(denom) < 1e-12) {
      dist[y] = 1.0;
    } else {
      const double ratio = std::sin(sd * t) / (sd * denom);
      dist[y] = ratio * ratio;
    }
  }
  return dist;
}

/// Distance between two phase fractions on the unit circle, in [0, 1/2].
inline double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

/// The best n-bit grid estimates of omega: one value, or two at an exact
/// tie (omega halfway between neighbouring grid points — either neighbour
/// counts as success).
inline std::vector<std::uint64_t> best_estimates(double omega, int n_bits) {
  const std::uint64_t s = std::uint64_t{1} << n_bits;
  const double scaled = (omega - std::floor(omega)) * static_cast<double>(s);
  const std::uint64_t lo = static_cast<std::uint64_t>(std::floor(scaled));
  const std::uint64_t a = lo % s;
  const std::uint64_t b = (lo + 1) % s;
  const double w = omega - std::floor(omega);
  const double da = circular_distance(w, static_cast<double>(a) /
                                             static_cast<double>(s));
  const double db = circular_distance(w, static_cast<double>(b) /
                                             static_cast<double>(s));
  if (da < db) return {a};
  if (db < da) return {b};
  return {a, b};
}

/// Rounds an m-bit phase index to the nearest n-bit index, circularly,
/// with ties toward the even n-bit value.
inline std::uint64_t round_phase_index(std::uint64_t y, int from_bits,
                                       int to_bits) {
  if (to_bits > from_bits) {
    throw std::invalid_argument("cannot round up to more bits");
  }
  const int shift = from_bits - to_bits;
  if (shift == 0) return y;
  const std::uint64_t half = std::uint64_t{1} << (shift - 1);
  const std::uint64_t rem = y & ((std::uint64_t{1} << shift) - 1);
  std::uint64_t q = y >> shift;
  if (rem > half || (rem == half && (q & 1))) ++q;
  return q & ((std::uint64_t{1} << to_bits) - 1);
}

/// Extra control qubits used to push the failure probability below
/// delta: ceil(log2(2 + 1/(2 delta))).
inline int boosted_extra_bits(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  const double raw = std::log2(2.0 + 1.0 / (2.0 * delta));
  return static_cast<int>(std::ceil(raw - 1e-12));
}

/// Exact probability that the boosted procedure lands within 2^{-n} of
/// omega: the mass of wide outcomes whose rounded value stays in the
/// target band. By construction of the extra-qubit count this is at
/// least 1 - delta.
inline double boosted_success_probability(double omega, int n_bits,
                                          double delta) {
  const int extra = boosted_extra_bits(delta);
  const int m = n_bits + extra;
  const std::vector<double> dist =
      exact_output_distribution(2.0 * std::numbers::pi * omega, m);
  const double grid = static_cast<double>(std::uint64_t{1} << n_bits);
  double p = 0.0;
  for (std::uint64_t y = 0; y < dist.size(); ++y) {
    const std::uint64_t rounded = round_phase_index(y, m, n_bits);
    const double estimate = static_cast<double>(rounded) / grid;
    if (circular_distance(estimate, omega - std::floor(omega)) <=
        1.0 / grid + 1e-15) {
      p += dist[y];
    }
  }
  return p;
}

/// Runs estimation with n + extra qubits and rounds the answer to n bits;
/// the result lands within 2^{-n} of the true phase (circularly) with
/// probability at least 1 - delta.
inline PhaseEstimate boosted_estimate(const ControlledPowerDevice& device,
                                      const QuantumRegister& eigenstate,
                                      int n_bits, double delta,
                                      std::mt19937_64& rng) {
  const int extra = boosted_extra_bits(delta);
  const PhaseEstimate wide =
      estimate_phase(device, eigenstate, n_bits + extra, rng);
  PhaseEstimate est;
  est.y = round_phase_index(wide.y, n_bits + extra, n_bits);
  est.n_bits = n_bits;
  est.omega_hat = static_cast<double>(est.y) /
                  static_cast<double>(std::uint64_t{1} << n_bits);
  return est;
}

}  // namespace qalg
