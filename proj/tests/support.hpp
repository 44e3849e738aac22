#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isect/isect.hpp"

namespace isect::test {

using ZPoly = UPoly<IntegerRing>;
using FPoly = UPoly<FqTRing>;

inline IntegerRing Z() { return {}; }
inline FqTRing Fq(unsigned q) { return FqTRing(make_field(BigInt(q))); }

inline ZPoly zpoly(const std::string& s) { return parse_poly(s, IntegerRing{}); }
inline FPoly fpoly(const FqTRing& R, const std::string& s) { return parse_poly(s, R); }
/// An element of F_q[T] written in T.
inline FieldPoly tpoly(const FqTRing& R, const std::string& s) {
  FPoly f = parse_poly(s, R);
  if (f.degree() > 0) throw error(errc::syntax_error, "expected a polynomial in T");
  return f.is_zero() ? R.zero() : f.coeff(0);
}

inline BigInt random_int(std::mt19937_64& rng, long long lo, long long hi) {
  return BigInt(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

inline FieldPoly random_tpoly(const FqTRing& R, std::mt19937_64& rng, unsigned max_deg) {
  std::vector<FFElement> c;
  const unsigned d = std::uniform_int_distribution<unsigned>(0, max_deg)(rng);
  for (unsigned i = 0; i <= d; ++i) c.push_back(R.field()->random(rng));
  return FieldPoly(R.field(), std::move(c));
}

inline ZPoly random_zpoly(std::mt19937_64& rng, unsigned deg, long long height, bool monic = false) {
  std::vector<BigInt> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(random_int(rng, -height, height));
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = random_int(rng, -height, height);
  return ZPoly(Z(), std::move(c));
}

inline FPoly random_fpoly(const FqTRing& R, std::mt19937_64& rng, unsigned deg, unsigned tdeg, bool monic = false) {
  std::vector<FieldPoly> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(random_tpoly(R, rng, tdeg));
  if (monic) c.back() = R.one();
  while (c.back().is_zero()) c.back() = random_tpoly(R, rng, tdeg);
  return FPoly(R, std::move(c));
}

/// Roots by evaluating at every residue; independent of localroots.
inline std::vector<BigInt> naive_roots(const ZPoly& f, std::uint64_t m) {
  std::vector<BigInt> out;
  for (std::uint64_t x = 0; x < m; ++x)
    if (mod_floor(f.eval(BigInt(x)), BigInt(m)) == 0) out.push_back(BigInt(x));
  return out;
}

inline std::vector<FieldPoly> naive_roots(const FPoly& f, const FieldPoly& m) {
  std::vector<FieldPoly> out;
  const auto D = static_cast<unsigned>(m.degree());
  const std::uint64_t n = checked_count(f.ring().q(), D);
  for (std::uint64_t i = 0; i < n; ++i) {
    FieldPoly r = poly_from_index(f.ring().field(), D, i);
    if ((f.eval(r) % m).is_zero()) out.push_back(r);
  }
  return out;
}

inline PrimeElement<IntegerRing> zprime(std::uint64_t p) { return Z().make_prime(BigInt(p)); }
inline PrimeElement<FqTRing> fprime(const FqTRing& R, const FieldPoly& p) { return R.make_prime(p); }

}  // namespace isect::test
