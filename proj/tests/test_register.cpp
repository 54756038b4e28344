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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "qalg/gates.hpp"
#include "qalg/number_theory.hpp"
#include "qalg/register.hpp"

using namespace qalg;
using qalg::test::max_amp_diff;
using qalg::test::random_state;
using qalg::test::random_unitary;

TEST_CASE("new register prepares a basis state") {
  const QuantumRegister zero(1, 0);
  REQUIRE(zero.amplitudes() == std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}});

  const QuantumRegister three(2, 3);
  REQUIRE(three.amplitude(3) == Complex{1.0, 0.0});
  REQUIRE(three.probability_of([](BasisIndex x) { return x == 3; }) == 1.0);

  const QuantumRegister x1(4, 1);
  REQUIRE(x1.amplitude(1) == Complex{1.0, 0.0});
  REQUIRE(x1.dimension() == 16);
}

TEST_CASE("register construction rejects bad arguments") {
  REQUIRE_THROWS_AS(QuantumRegister(0), std::invalid_argument);
  REQUIRE_THROWS_AS(QuantumRegister(config::max_qubits() + 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(QuantumRegister(2, 4), std::invalid_argument);
}

TEST_CASE("Hadamard on |0> gives the uniform pair") {
  QuantumRegister reg(1);
  apply_hadamard(reg, 0);
  const double s = 1.0 / std::numbers::sqrt2;
  REQUIRE(max_amp_diff(reg, {Complex{s, 0}, Complex{s, 0}}) < kStrictTol);

  // H twice restores |x> for both basis states.
  for (BasisIndex x : {0u, 1u}) {
    QuantumRegister r(1, x);
    apply_hadamard(r, 0);
    apply_hadamard(r, 0);
    REQUIRE(std::abs(r.amplitude(x) - 1.0) < kStrictTol);
  }
}

TEST_CASE("phase_shift(pi) maps |+> to |->") {
  QuantumRegister reg(1);
  apply_hadamard(reg, 0);
  const std::vector<Complex> before = reg.amplitudes();
  reg.apply_single_qubit(0, phase_shift(std::numbers::pi));
  // Oracle: direct matrix application.
  const auto expected =
      qalg::test::mat2_apply(phase_shift(std::numbers::pi), before);
  REQUIRE(max_amp_diff(reg, expected) < kStrictTol);
  const double s = 1.0 / std::numbers::sqrt2;
  REQUIRE(std::abs(reg.amplitude(0) - s) < kStrictTol);
  REQUIRE(std::abs(reg.amplitude(1) + s) < kStrictTol);
}

TEST_CASE("single-qubit kernel matches dense matrix action on random states") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const int q = static_cast<int>(uniform_below(rng, n));
    QuantumRegister reg = random_state(n, rng);
    const std::vector<Complex> before = reg.amplitudes();
    const Mat2 u = random_unitary(rng);
    reg.apply_single_qubit(q, u);

    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < reg.dimension(); ++i) {
      if (i & bit) continue;
      const Complex want0 = u.m00 * before[i] + u.m01 * before[i | bit];
      const Complex want1 = u.m10 * before[i] + u.m11 * before[i | bit];
      REQUIRE(std::abs(reg.amplitudes()[i] - want0) < kStrictTol);
      REQUIRE(std::abs(reg.amplitudes()[i | bit] - want1) < kStrictTol);
    }
  }
}

TEST_CASE("norm is preserved across random gate sequences") {
  std::mt19937_64 rng(777);
  QuantumRegister reg(5);
  for (int step = 0; step < 200; ++step) {
    const int q = static_cast<int>(uniform_below(rng, 5));
    reg.apply_single_qubit(q, random_unitary(rng));
  }
  REQUIRE(std::abs(reg.norm() - 1.0) < kComparisonTol);
}

TEST_CASE("unitary round trip restores amplitudes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    QuantumRegister reg = random_state(4, rng);
    const QuantumRegister before = reg;
    const Mat2 u = random_unitary(rng);
    const int q = static_cast<int>(uniform_below(rng, 4));
    reg.apply_single_qubit(q, u);
    reg.apply_single_qubit(q, u.adjoint());
    REQUIRE(max_amp_diff(reg, before) < kStrictTol);
  }
}

TEST_CASE("controlled action applies only on the control=1 subspace") {
  SECTION("kick-back of an eigenphase onto the control") {
    // Target |psi> = |1> eigenstate of phase_shift(phi); control in |+>.
    const double phi = 1.3;
    QuantumRegister reg(2, 0b10);
    apply_hadamard(reg, 0);
    reg.apply_controlled_single_qubit(0, 1, phase_shift(phi));
    const double s = 1.0 / std::numbers::sqrt2;
    REQUIRE(std::abs(reg.amplitude(0b10) - Complex{s, 0.0}) < kStrictTol);
    REQUIRE(std::abs(reg.amplitude(0b11) - std::polar(s, phi)) < kStrictTol);
  }

  SECTION("control at |0> leaves the state bit-identical") {
    std::mt19937_64 rng(5);
    QuantumRegister reg = random_state(3, rng);
    // Zero out the control=1 half so the control is exactly |0>.
    std::vector<Complex> amps = reg.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      if (i & 1) amps[i] = 0.0;
    }
    QuantumRegister fixed = QuantumRegister::from_amplitudes(amps);
    QuantumRegister after = fixed;
    after.apply_controlled_single_qubit(0, 2, random_unitary(rng));
    REQUIRE(after.amplitudes() == fixed.amplitudes());
  }

  SECTION("controlled phase on |11> multiplies by e^{i phi}") {
    const double phi = 0.7;
    QuantumRegister reg(2, 0b11);
    reg.apply_controlled_single_qubit(0, 1, phase_shift(phi));
    REQUIRE(std::abs(reg.amplitude(0b11) - std::polar(1.0, phi)) < kStrictTol);
  }

  SECTION("generic controlled action equals the specialized kernel") {
    std::mt19937_64 rng(99);
    const Mat2 u = random_unitary(rng);
    QuantumRegister a = random_state(4, rng);
    QuantumRegister b = a;
    a.apply_controlled_single_qubit(1, 3, u);
    // Same gate through the gather/scatter path: qubit 3 compacts to 2.
    b.apply_controlled(1, [&](QuantumRegister& sub) {
      sub.apply_single_qubit(2, u);
    });
    REQUIRE(max_amp_diff(a, b) < kStrictTol);
  }
}

TEST_CASE("permutations move amplitudes and preserve their multiset") {
  SECTION("identity") {
    std::mt19937_64 rng(8);
    QuantumRegister reg = random_state(3, rng);
    const QuantumRegister before = reg;
    reg.apply_permutation([](BasisIndex x) { return x; });
    REQUIRE(reg.amplitudes() == before.amplitudes());
  }

  SECTION("modular multiplication by 4 mod 35 sends |1> to |4>") {
    QuantumRegister reg(6, 1);
    reg.apply_permutation(modular_mult_gate(4, 35, 6));
    REQUIRE(reg.amplitude(4) == Complex{1.0, 0.0});
    REQUIRE(reg.probability_of([](BasisIndex x) { return x == 4; }) == 1.0);
  }

  SECTION("perm then inverse perm restores the state") {
    std::mt19937_64 rng(17);
    QuantumRegister reg = random_state(6, rng);
    const QuantumRegister before = reg;
    reg.apply_permutation(modular_mult_gate(4, 35, 6));
    reg.apply_permutation(modular_mult_gate(mod_inverse(4, 35), 35, 6));
    REQUIRE(max_amp_diff(reg, before) < kStrictTol);
  }

  SECTION("sorted |amplitude| multiset is untouched") {
    std::mt19937_64 rng(23);
    QuantumRegister reg = random_state(5, rng);
    auto mags = [](const QuantumRegister& r) {
      std::vector<double> m;
      for (const Complex& a : r.amplitudes()) m.push_back(std::abs(a));
      std::sort(m.begin(), m.end());
      return m;
    };
    const auto before = mags(reg);
    reg.apply_permutation([](BasisIndex x) { return x ^ 0b10110; });
    REQUIRE(mags(reg) == before);
  }

  SECTION("non-bijective maps are rejected by the coverage check") {
    QuantumRegister reg(2);
    REQUIRE_THROWS_AS(
        reg.apply_permutation([](BasisIndex) { return BasisIndex{0}; },
                              /*validate=*/true),
        std::invalid_argument);
  }
}

TEST_CASE("diagonal phases change phases only") {
  std::mt19937_64 rng(29);
  QuantumRegister reg = random_state(4, rng);
  const QuantumRegister before = reg;

  SECTION("zero phase is the identity") {
    reg.apply_diagonal([](BasisIndex) { return 0.0; });
    REQUIRE(max_amp_diff(reg, before) < kStrictTol);
  }

  SECTION("pi phases implement a sign oracle, moduli unchanged") {
    const auto f = [](BasisIndex x) { return x % 3 == 1; };
    reg.apply_diagonal(
        [&](BasisIndex x) { return f(x) ? std::numbers::pi : 0.0; });
    for (std::uint64_t x = 0; x < reg.dimension(); ++x) {
      REQUIRE(std::abs(std::abs(reg.amplitudes()[x]) -
                       std::abs(before.amplitudes()[x])) < kStrictTol);
      const Complex want =
          f(x) ? -before.amplitudes()[x] : before.amplitudes()[x];
      REQUIRE(std::abs(reg.amplitudes()[x] - want) < 1e-15);
    }
  }

  SECTION("pi phase at zero implements the U0 reflection") {
    reg.apply_diagonal(
        [](BasisIndex x) { return x == 0 ? std::numbers::pi : 0.0; });
    REQUIRE(std::abs(reg.amplitude(0) + before.amplitude(0)) < 1e-15);
    REQUIRE(std::abs(reg.amplitude(5) - before.amplitude(5)) < 1e-15);
  }
}

TEST_CASE("probability_of sums the selected mass") {
  std::mt19937_64 rng(41);
  const QuantumRegister reg = random_state(5, rng);
  REQUIRE(std::abs(reg.probability_of([](BasisIndex) { return true; }) - 1.0) <
          kStrictTol);
  const double p0 = reg.probability_of_qubit(2, 0);
  const double p1 = reg.probability_of_qubit(2, 1);
  REQUIRE(std::abs(p0 + p1 - 1.0) < kStrictTol);
}

TEST_CASE("measurement collapses to the sampled outcome") {
  SECTION("a basis state measures to itself with probability 1") {
    std::mt19937_64 rng(1);
    QuantumRegister reg(3, 5);
    const std::vector<int> all{0, 1, 2};
    const MeasurementOutcome out = reg.measure_qubits(all, rng);
    REQUIRE(out.result == 5);
    REQUIRE(out.probability == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(reg.amplitude(5) - 1.0) < kStrictTol);
  }

  SECTION("identical seeds reproduce identical outcome sequences") {
    const auto run = [](std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      std::vector<BasisIndex> results;
      for (int i = 0; i < 32; ++i) {
        QuantumRegister reg(3);
        for (int q = 0; q < 3; ++q) apply_hadamard(reg, q);
        const std::vector<int> all{0, 1, 2};
        results.push_back(reg.measure_qubits(all, rng).result);
      }
      return results;
    };
    REQUIRE(run(2026) == run(2026));
    REQUIRE(run(2026) != run(2027));
  }

  SECTION("sampling |+> 10000 times lands near 1/2") {
    std::mt19937_64 rng(90210);
    int zeros = 0;
    const std::vector<int> q0{0};
    for (int i = 0; i < 10000; ++i) {
      QuantumRegister reg(1);
      apply_hadamard(reg, 0);
      if (reg.measure_qubits(q0, rng).result == 0) ++zeros;
    }
    // 5-sigma binomial band around p = 1/2.
    REQUIRE(zeros > 4700);
    REQUIRE(zeros < 5300);
  }

  SECTION("partial measurement renormalizes the post state") {
    std::mt19937_64 rng(3);
    QuantumRegister reg = random_state(4, rng);
    const QuantumRegister before = reg;
    const std::vector<int> some{1, 3};
    const MeasurementOutcome out = reg.measure_qubits(some, rng);
    REQUIRE(std::abs(reg.norm() - 1.0) < kComparisonTol);
    // The outcome probability matches the pre-measurement mass.
    const double mass = before.probability_of([&](BasisIndex x) {
      return (((x >> 1) & 1) == (out.result & 1)) &&
             (((x >> 3) & 1) == ((out.result >> 1) & 1));
    });
    REQUIRE(out.probability == Catch::Approx(mass).margin(1e-12));
  }

  SECTION("empty qubit set is rejected") {
    std::mt19937_64 rng(4);
    QuantumRegister reg(2);
    const std::vector<int> none{};
    REQUIRE_THROWS_AS(reg.measure_qubits(none, rng), std::invalid_argument);
  }
}

TEST_CASE("debug checks catch non-unitary gate inputs") {
  config::set_debug_checks(true);
  QuantumRegister reg(1);
  const Mat2 bad{1.0, 0.0, 0.0, 2.0};
  REQUIRE_THROWS_AS(reg.apply_single_qubit(0, bad), std::invalid_argument);
  config::set_debug_checks(false);
  REQUIRE_NOTHROW(reg.apply_single_qubit(0, bad));
}

TEST_CASE("qubit bounds are enforced") {
  QuantumRegister reg(2);
  REQUIRE_THROWS_AS(reg.apply_single_qubit(2, hadamard()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(reg.apply_controlled_single_qubit(0, 0, hadamard()),
                    std::invalid_argument);
}
