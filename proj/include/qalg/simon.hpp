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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qalg/core.hpp"
#include "qalg/gates.hpp"
#include "qalg/qft.hpp"
#include "qalg/register.hpp"

namespace qalg {

// Hidden subgroup solving over Z_2^n. Given f constant and distinct on
// the cosets of a hidden subgroup K, the network H^n — oracle — H^n
// measures a uniformly random y orthogonal to K (y . k = 0 mod 2 for all
// k in K). Enough samples pin down K as the GF(2) null space of the
// collected rows. Over Z_2^n the Fourier transform is exactly H^n.

namespace gf2 {

inline int dot(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a & b) & 1;
}

/// Reduced row echelon form over GF(2); returns the nonzero rows with
/// pivots from the highest bit down.
inline std::vector<std::uint64_t> row_reduce(std::vector<std::uint64_t> rows,
                                             int n) {
  std::vector<std::uint64_t> out;
  for (int bit = n - 1; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    std::size_t found = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] & mask) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    const std::uint64_t pivot = rows[found];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
    for (auto& r : rows) {
      if (r & mask) r ^= pivot;
    }
    for (auto& r : out) {
      if (r & mask) r ^= pivot;
    }
    out.push_back(pivot);
  }
  return out;
}

/// Basis of {v : row . v = 0 for every row}, rows in RREF.
inline std::vector<std::uint64_t> null_space(
    const std::vector<std::uint64_t>& reduced_rows, int n) {
  std::uint64_t pivot_mask = 0;
  std::vector<int> pivot_bit(reduced_rows.size());
  for (std::size_t i = 0; i < reduced_rows.size(); ++i) {
    const int p = 63 - std::countl_zero(reduced_rows[i]);
    pivot_bit[i] = p;
    pivot_mask |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> basis;
  for (int f = n - 1; f >= 0; --f) {
    const std::uint64_t fbit = std::uint64_t{1} << f;
    if (pivot_mask & fbit) continue;
    std::uint64_t v = fbit;
    for (std::size_t i = 0; i < reduced_rows.size(); ++i) {
      if (reduced_rows[i] & fbit) {
        v |= std::uint64_t{1} << pivot_bit[i];
      }
    }
    basis.push_back(v);
  }
  return basis;
}

/// Canonical generating set of the subgroup spanned by `vectors`
/// (equal subgroups yield equal canonical sets).
inline std::vector<std::uint64_t> canonical_generators(
    std::vector<std::uint64_t> vectors, int n) {
  return row_reduce(std::move(vectors), n);
}

/// All elements of the subgroup generated by `generators`.
inline std::vector<std::uint64_t> span(std::span<const std::uint64_t> gens,
                                       int n) {
  const std::vector<std::uint64_t> basis =
      row_reduce({gens.begin(), gens.end()}, n);
  std::vector<std::uint64_t> elements{0};
  for (std::uint64_t g : basis) {
    const std::size_t size = elements.size();
    for (std::size_t i = 0; i < size; ++i) elements.push_back(elements[i] ^ g);
  }
  return elements;
}

}  // namespace gf2

/// An oracle promised to be constant on each coset of a hidden subgroup
/// K <= Z_2^n and distinct across cosets.
struct HiddenSubgroupInstance {
  int n;
  OracleFunction oracle;
};

/// Builds an instance whose oracle maps x to the smallest element of its
/// K-coset, for K spanned by the given generators.
inline HiddenSubgroupInstance coset_oracle_instance(
    int n, std::span<const std::uint64_t> generators) {
  if (n < 1 || n > 20) throw std::invalid_argument("group size out of range");
  for (std::uint64_t g : generators) {
    if (g >= (std::uint64_t{1} << n)) {
      throw std::invalid_argument("generator outside the group");
    }
  }
  const std::vector<std::uint64_t> subgroup = gf2::span(generators, n);
  std::vector<std::uint64_t> table(std::uint64_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    std::uint64_t rep = x;
    for (std::uint64_t k : subgroup) rep = std::min(rep, x ^ k);
    table[x] = rep;
  }
  return {n, OracleFunction::from_table(std::move(table),
                                        std::uint64_t{1} << n)};
}

struct SimonResult {
  std::vector<std::uint64_t> generators;  ///< canonical basis of K
  int queries = 0;                        ///< quantum oracle queries used
};

/// Recovers the hidden subgroup. Each query runs the Fourier sandwich and
/// measures one y orthogonal to K; the candidate K' (null space of the
/// rows so far) always contains K, so the run stops exactly when every
/// candidate generator g verifies classically via f(g) = f(0), which
/// certifies K' = K. The f(x) = f(y) <=> x xor y in K promise is assumed,
/// not checked. Empty result: max_queries exhausted before the rank
/// completed (the probability of needing more than n + c samples decays
/// as 2^{-c}). `observe_sample` sees every measured y.
inline std::optional<SimonResult> simon_solve(
    const HiddenSubgroupInstance& instance, std::mt19937_64& rng,
    int max_queries,
    const std::function<void(std::uint64_t)>& observe_sample = nullptr) {
  const int n = instance.n;
  const OracleFunction& f = instance.oracle;
  if (f.domain_bits() != n) {
    throw std::invalid_argument("oracle domain does not match group size");
  }
  const int out_bits =
      std::max(1, static_cast<int>(std::bit_width(f.codomain_modulus() - 1)));
  const std::uint64_t f0 = f.eval_counted(0);
  const auto input_qubits = qubit_range(0, n);

  std::vector<std::uint64_t> rows;
  for (int query = 1; query <= max_queries; ++query) {
    QuantumRegister reg(n + out_bits);
    apply_hadamard_all(reg, 0, n);
    apply_f_controlled_add(reg, f, 0, n, out_bits);
    apply_hadamard_all(reg, 0, n);
    const MeasurementOutcome out = reg.measure_qubits(input_qubits, rng);
    if (observe_sample) observe_sample(out.result);

    rows.push_back(out.result);
    rows = gf2::row_reduce(std::move(rows), n);
    const std::vector<std::uint64_t> candidate = gf2::null_space(rows, n);
    bool verified = true;
    for (std::uint64_t g : candidate) {
      if (f.eval_counted(g) != f0) {
        verified = false;
        break;
      }
    }
    if (verified) {
      return SimonResult{gf2::canonical_generators(candidate, n), query};
    }
  }
  return std::nullopt;
}

}  // namespace qalg
