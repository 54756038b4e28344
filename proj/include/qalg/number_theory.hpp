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
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qalg {

// Exact integer arithmetic for order finding and factoring. Everything
// here is 64-bit with 128-bit intermediates; no floating point.

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// A reduced non-negative fraction.
struct Fraction {
  u64 numerator = 0;
  u64 denominator = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The canonical residue of y mod N in [0, N), defined for negative y too.
inline u64 mod_reduce(i64 y, u64 N) {
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  i64 r = y % static_cast<i64>(N);
  if (r < 0) r += static_cast<i64>(N);
  return static_cast<u64>(r);
}

inline u64 mul_mod(u64 a, u64 b, u64 N) {
  return static_cast<u64>((static_cast<u128>(a) * b) % N);
}

/// a^x mod N by repeated squaring.
inline u64 mod_pow(u64 a, u64 x, u64 N) {
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  if (N == 1) return 0;
  u64 result = 1;
  u64 base = a % N;
  while (x > 0) {
    if (x & 1) result = mul_mod(result, base, N);
    base = mul_mod(base, base, N);
    x >>= 1;
  }
  return result;
}

inline u64 gcd(u64 a, u64 b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b).
inline std::tuple<u64, i64, i64> extended_gcd(u64 a, u64 b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  i64 old_r = static_cast<i64>(a), r = static_cast<i64>(b);
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {static_cast<u64>(old_r), old_s, old_t};
}

/// s with s*a = 1 mod N, for gcd(a, N) = 1.
inline u64 mod_inverse(u64 a, u64 N) {
  auto [g, s, t] = extended_gcd(a % N, N);
  if (g != 1) throw std::invalid_argument("value is not invertible");
  (void)t;
  return mod_reduce(s, N);
}

/// Finds the unique reduced a/b with 0 < b <= N and
/// |y/2^m - a/b| < 1/(2 N^2), if one exists, by walking the continued
/// fraction convergents of y/2^m. The bound makes the match unique, so
/// the first convergent that satisfies it is the answer; absence is a
/// value, not an error. Comparisons use exact cross multiplication.
inline std::optional<Fraction> continued_fraction_match(u64 y, int m, u64 N) {
  if (m < 0 || m > 62 || y >= (u64{1} << m)) {
    throw std::invalid_argument("estimate must satisfy 0 <= y < 2^m");
  }
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  const u64 Q = u64{1} << m;

  // |y/Q - p/q| < 1/(2N^2)  <=>  2 N^2 |y q - p Q| < Q q
  const auto within_bound = [&](u64 p, u64 q) {
    const i128 diff = static_cast<i128>(y) * q - static_cast<i128>(p) * Q;
    const u128 mag = diff < 0 ? static_cast<u128>(-diff)
                              : static_cast<u128>(diff);
    return 2 * static_cast<u128>(N) * N * mag <
           static_cast<u128>(Q) * q;
  };

  u64 num = y, den = Q;
  u64 p_prev = 1, q_prev = 0;  // convergent h_{-1}
  u64 p_cur = 0, q_cur = 1;    // convergent h_0 = floor(y/Q) = 0
  if (within_bound(p_cur, q_cur)) return Fraction{p_cur, q_cur};
  u64 rem = num;  // y < Q, so a_0 = 0 and the first remainder is y
  num = den;
  den = rem;
  while (den != 0) {
    const u64 a = num / den;
    const u64 p_next = a * p_cur + p_prev;
    const u64 q_next = a * q_cur + q_prev;
    if (q_next > N) break;
    if (within_bound(p_next, q_next)) return Fraction{p_next, q_next};
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    rem = num % den;
    num = den;
    den = rem;
  }
  return std::nullopt;
}

/// Least r >= 1 with a^r = 1 mod N; the classical oracle quantum order
/// finding is tested against. Requires gcd(a, N) = 1.
inline u64 multiplicative_order(u64 a, u64 N) {
  if (N == 0) throw std::invalid_argument("modulus must be positive");
  if (N == 1) return 1;
  if (gcd(a % N == 0 ? N : a % N, N) != 1) {
    throw std::invalid_argument("order undefined: value not coprime");
  }
  u64 acc = a % N;
  u64 r = 1;
  while (acc != 1) {
    acc = mul_mod(acc, a, N);
    ++r;
  }
  return r;
}

/// From a^r = 1 mod N, attempts the split (gcd(a^{r/2} - 1, N),
/// gcd(a^{r/2} + 1, N)). Empty when r is odd or a^{r/2} = -1 mod N — the
/// caller retries with a fresh a.
inline std::optional<std::pair<u64, u64>> split_from_order(u64 a, u64 r,
                                                           u64 N) {
  if (N < 2) throw std::invalid_argument("modulus must be at least 2");
  if (mod_pow(a, r, N) != 1) {
    throw std::invalid_argument("r is not a period of a mod N");
  }
  if (r % 2 != 0) return std::nullopt;
  const u64 half = mod_pow(a, r / 2, N);
  if (half == N - 1 || half == 1) return std::nullopt;
  const u64 n1 = gcd(half - 1, N);
  const u64 n2 = gcd(half + 1, N);
  if (n1 <= 1 || n1 >= N || n2 <= 1 || n2 >= N) return std::nullopt;
  return std::make_pair(n1, n2);
}

namespace detail {

inline u64 mul_mod_any(u64 a, u64 b, u64 N) {
  return static_cast<u64>((static_cast<u128>(a) * b) % N);
}

inline u64 pow_mod_any(u64 a, u64 x, u64 N) {
  u64 result = 1 % N;
  u64 base = a % N;
  while (x > 0) {
    if (x & 1) result = mul_mod_any(result, base, N);
    base = mul_mod_any(base, base, N);
    x >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime(u64 N) {
  if (N < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (N == p) return true;
    if (N % p == 0) return false;
  }
  u64 d = N - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = detail::pow_mod_any(a, d, N);
    if (x == 1 || x == N - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod_any(x, x, N);
      if (x == N - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace detail {

/// floor(N^{1/e}) by Newton-free bracketed search, verified exactly.
inline u64 integer_root(u64 N, int e) {
  if (e == 1) return N;
  u64 lo = 1, hi = u64{1} << (64 / e + 1);
  const auto pow_leq = [&](u64 r) {
    u128 acc = 1;
    for (int i = 0; i < e; ++i) {
      acc *= r;
      if (acc > N) return false;
    }
    return true;
  };
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if (pow_leq(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace detail

/// (p, e) with p^e = N and p prime, when N is a prime power.
inline std::optional<std::pair<u64, int>> is_prime_power(u64 N) {
  if (N < 2) throw std::invalid_argument("argument must be at least 2");
  for (int e = 1; (u64{1} << e) <= N || e == 1; ++e) {
    if (e > 63) break;
    const u64 r = detail::integer_root(N, e);
    if (r < 2) break;
    u128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= r;
    if (acc == N && is_prime(r)) return std::make_pair(r, e);
  }
  return std::nullopt;
}

/// A number as sorted (prime, exponent) pairs.
struct Factorization {
  std::vector<std::pair<u64, int>> prime_powers;

  void multiply_in(u64 p, int e) {
    for (auto& [q, k] : prime_powers) {
      if (q == p) {
        k += e;
        return;
      }
    }
    prime_powers.emplace_back(p, e);
    std::sort(prime_powers.begin(), prime_powers.end());
  }

  void merge(const Factorization& other) {
    for (const auto& [p, e] : other.prime_powers) multiply_in(p, e);
  }

  u64 product() const {
    u64 n = 1;
    for (const auto& [p, e] : prime_powers) {
      for (int i = 0; i < e; ++i) n *= p;
    }
    return n;
  }
};

}  // namespace qalg
