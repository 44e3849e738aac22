#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "error.hpp"

namespace isect {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline int sign(const BigInt& a) { return a.sign(); }

/// Remainder in [0, |m|).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt am = abs(m);
  BigInt r = a % am;
  if (r < 0) r += am;
  return r;
}

/// Remainder in (-|m|/2, |m|/2].
inline BigInt mod_symmetric(const BigInt& a, const BigInt& m) {
  BigInt am = abs(m);
  BigInt r = mod_floor(a, am);
  if (2 * r > am) r -= am;
  return r;
}

inline BigInt pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp) b *= b;
  }
  return result;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> xgcd(const BigInt& a, const BigInt& b) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
  auto [g, s, t] = xgcd(mod_floor(a, m), abs(m));
  if (g != 1) throw error(errc::division_by_zero, "element not invertible modulo " + m.str());
  return mod_floor(s, m);
}

inline BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  return boost::multiprecision::powm(mod_floor(base, m), exp, abs(m));
}

inline std::uint64_t to_u64(const BigInt& a) { return a.convert_to<std::uint64_t>(); }

/// Integer square root (floor).
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw error(errc::unsupported, "isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

/// Primes below `limit` by the sieve of Eratosthenes.
inline std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = primes_below(1'000'001);
  return table;
}

/// Deterministic for n < 3.3e24 (fixed witness set); probabilistic with a fixed seed beyond.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    BigInt x = powmod(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  if (n < BigInt("3317044064679887385961981")) return true;
  std::mt19937_64 gen(0x5eedULL);
  return boost::multiprecision::miller_rabin_test(n, 16, gen);
}

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
inline BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 64;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_rec(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace detail

/// Factorization of |n| into (prime, multiplicity), primes ascending.
/// Trial division up to 10^6, then Pollard rho on the cofactor.
inline std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  if (n == 0) throw error(errc::zero_input, "cannot factor zero");
  BigInt m = abs(n);
  std::vector<std::pair<BigInt, unsigned>> result;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    result.emplace_back(BigInt(p), e);
  }
  if (m > 1) {
    std::vector<BigInt> rest;
    detail::factor_rec(m, rest);
    std::sort(rest.begin(), rest.end());
    for (const auto& p : rest) {
      if (!result.empty() && result.back().first == p)
        ++result.back().second;
      else
        result.emplace_back(p, 1U);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace isect
