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
#include <numbers>
#include <random>
#include <vector>

#include "qalg/gates.hpp"
#include "qalg/register.hpp"

namespace qalg::test {

/// Haar-ish random 2x2 unitary from three Euler angles and a global phase.
inline Mat2 random_unitary(std::mt19937_64& rng) {
  const auto angle = [&] {
    return 2.0 * std::numbers::pi * uniform_unit(rng);
  };
  const double alpha = angle(), beta = angle(), gamma = angle(),
               delta = angle();
  const Complex ea = std::polar(1.0, alpha);
  const double c = std::cos(gamma / 2.0), s = std::sin(gamma / 2.0);
  const Complex eb0 = std::polar(1.0, -beta / 2.0),
                eb1 = std::polar(1.0, beta / 2.0);
  const Complex ed0 = std::polar(1.0, -delta / 2.0),
                ed1 = std::polar(1.0, delta / 2.0);
  return {ea * eb0 * c * ed0, -ea * eb0 * s * ed1,
          ea * eb1 * s * ed0, ea * eb1 * c * ed1};
}

/// Random normalized state on n qubits.
inline QuantumRegister random_state(int n, std::mt19937_64& rng) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Complex> amps(dim);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = Complex{uniform_unit(rng) - 0.5, uniform_unit(rng) - 0.5};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  return QuantumRegister::from_amplitudes(std::move(amps));
}

/// Largest element-wise amplitude difference against an expected vector.
inline double max_amp_diff(const QuantumRegister& reg,
                           const std::vector<Complex>& expected) {
  double worst = 0.0;
  for (std::uint64_t x = 0; x < reg.dimension(); ++x) {
    worst = std::max(worst, std::abs(reg.amplitudes()[x] - expected[x]));
  }
  return worst;
}

inline double max_amp_diff(const QuantumRegister& a,
                           const QuantumRegister& b) {
  return max_amp_diff(a, b.amplitudes());
}

/// Applies a 2x2 matrix to a 2-vector — the independent oracle for
/// single-qubit gate examples.
inline std::vector<Complex> mat2_apply(const Mat2& u,
                                       const std::vector<Complex>& v) {
  return {u.m00 * v[0] + u.m01 * v[1], u.m10 * v[0] + u.m11 * v[1]};
}

/// Largest Schmidt coefficient of a pure state across the bipartition
/// (part_a, rest): the top singular value of the amplitude matrix,
/// found by power iteration on the smaller Gram matrix.
inline double largest_schmidt_coefficient(const QuantumRegister& reg,
                                          const std::vector<int>& part_a) {
  std::vector<int> part_b;
  for (int q = 0; q < reg.n_qubits(); ++q) {
    if (std::find(part_a.begin(), part_a.end(), q) == part_a.end()) {
      part_b.push_back(q);
    }
  }
  const std::size_t da = std::size_t{1} << part_a.size();
  const std::size_t db = std::size_t{1} << part_b.size();
  std::vector<Complex> m(da * db);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < db; ++b) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < part_a.size(); ++i) {
        if (a & (std::size_t{1} << i)) idx |= std::uint64_t{1} << part_a[i];
      }
      for (std::size_t i = 0; i < part_b.size(); ++i) {
        if (b & (std::size_t{1} << i)) idx |= std::uint64_t{1} << part_b[i];
      }
      m[a * db + b] = reg.amplitudes()[idx];
    }
  }
  // Gram matrix on the smaller side.
  const bool a_small = da <= db;
  const std::size_t dim = a_small ? da : db;
  std::vector<Complex> gram(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      const std::size_t other = a_small ? db : da;
      for (std::size_t k = 0; k < other; ++k) {
        const Complex x = a_small ? m[i * db + k] : m[k * db + i];
        const Complex y = a_small ? m[j * db + k] : m[k * db + j];
        acc += x * std::conj(y);
      }
      gram[i * dim + j] = acc;
    }
  }
  // Generic start vector (never orthogonal to the top eigenvector by
  // construction accident the way an all-ones start can be).
  std::vector<Complex> v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    v[k] = Complex{std::cos(0.9 * double(k) + 0.3),
                   std::sin(1.7 * double(k) + 0.2)};
  }
  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Complex> w(dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) w[i] += gram[i * dim + j] * v[j];
    }
    double norm2 = 0.0;
    for (const Complex& x : w) norm2 += std::norm(x);
    if (norm2 == 0.0) return 0.0;
    const double norm = std::sqrt(norm2);
    for (Complex& x : w) x /= norm;
    lambda = norm;
    v = std::move(w);
  }
  return std::sqrt(lambda);
}

}  // namespace qalg::test
