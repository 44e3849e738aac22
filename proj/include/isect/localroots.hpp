#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field_poly.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

template <class Ring>
struct PrimePower {
  PrimeElement<Ring> prime;
  unsigned exponent = 1;

  typename Ring::element_type value(const Ring& R) const { return R.pow(prime.value, exponent); }
};

/// Product of powers of pairwise distinct primes.
template <class Ring>
struct Modulus {
  std::vector<PrimePower<Ring>> parts;

  bool empty() const noexcept { return parts.empty(); }
  typename Ring::element_type value(const Ring& R) const {
    auto acc = R.one();
    for (const auto& pp : parts) acc = acc * pp.value(R);
    return acc;
  }
};

template <class Ring>
std::string to_string(const Ring& R, const PrimePower<Ring>& pp) {
  std::string s = R.to_string(pp.prime.value);
  if (pp.exponent == 1) return s;
  if (s.find(' ') != std::string::npos) s = "(" + s + ")";
  return s + "^" + std::to_string(pp.exponent);
}

template <class Ring>
std::string to_string(const Ring& R, const Modulus<Ring>& m) {
  if (m.parts.empty()) return "1";
  if (m.parts.size() == 1) return to_string(R, m.parts[0]);
  std::string out;
  for (const auto& pp : m.parts) {
    if (!out.empty()) out += " * ";
    std::string s = to_string(R, pp);
    if (pp.exponent == 1 && s.find(' ') != std::string::npos) s = "(" + s + ")";
    out += s;
  }
  return out;
}

template <class Ring>
struct RootResult {
  bool found = false;
  std::optional<typename Ring::element_type> root;  // canonical residue
};

/// Root of f modulo the prime of `rf`, as the least residue-field root lifted canonically.
template <class Ring>
RootResult<Ring> has_root_mod_prime(const UPoly<Ring>& f, const typename Ring::residue_field_type& rf) {
  FieldPoly fb = reduce_mod_prime<Ring>(f, rf);
  if (fb.degree() < 1) return {};
  auto r = roots(fb);
  if (r.empty()) return {};
  return {true, rf.lift(r.front())};
}

template <class Ring>
RootResult<Ring> has_root_mod_prime(const UPoly<Ring>& f, const PrimeElement<Ring>& p) {
  return has_root_mod_prime<Ring>(f, f.ring().residue_field(p));
}

namespace detail {

// v_p(c) capped at `cap`; zero counts as cap.
template <class Ring>
unsigned valuation_capped(const Ring& R, typename Ring::element_type c, const typename Ring::element_type& p,
                          unsigned cap) {
  if (R.is_zero(c)) return cap;
  unsigned v = 0;
  while (v < cap) {
    auto q = R.divide(c, p);
    if (!q) break;
    c = std::move(*q);
    ++v;
  }
  return v;
}

template <class Ring>
struct LocalContext {
  const Ring* R;
  const typename Ring::residue_field_type* rf;
  typename Ring::element_type prime;
};

// Newton iteration from a simple root r mod p to modulus p^k.
template <class Ring>
typename Ring::element_type newton_lift(const UPoly<Ring>& f, typename Ring::element_type r,
                                        const LocalContext<Ring>& ctx, unsigned k) {
  const Ring& R = *ctx.R;
  const UPoly<Ring> df = f.derivative();
  unsigned prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    auto m = R.pow(ctx.prime, prec);
    auto fr = R.reduce(f.eval(r), m);
    auto dr = R.reduce(df.eval(r), m);
    r = R.reduce(r - fr * R.inv_mod(dr, m), m);
  }
  return r;
}

// Some r with f(r) = 0 mod p^k; f need not be primitive.
template <class Ring>
std::optional<typename Ring::element_type> find_root(UPoly<Ring> f, unsigned k, const LocalContext<Ring>& ctx) {
  const Ring& R = *ctx.R;
  if (k == 0) return R.zero();
  const auto pk = R.pow(ctx.prime, k);
  std::vector<typename Ring::element_type> c;
  unsigned v = k;
  for (const auto& a : f.coeffs()) {
    c.push_back(R.reduce(a, pk));
    v = std::min(v, valuation_capped(R, c.back(), ctx.prime, k));
  }
  if (v >= k) return R.zero();
  const auto pv = R.pow(ctx.prime, v);
  for (auto& a : c) a = R.divide_exact(a, pv);
  f = UPoly<Ring>(R, std::move(c));
  const unsigned kk = k - v;
  FieldPoly fb = image<Ring>(f, *ctx.rf);
  if (fb.degree() < 1) return std::nullopt;
  const UPoly<Ring> df = f.derivative();
  for (const auto& rho : roots(fb)) {
    auto r0 = ctx.rf->lift(rho);
    if (!ctx.rf->field()->is_zero(ctx.rf->reduce(df.eval(r0)))) return newton_lift(f, r0, ctx, kk);
    if (kk == 1) return r0;
    // singular root: substitute x = r0 + p*y
    UPoly<Ring> g = f.compose_linear(r0, ctx.prime);
    if (auto y = find_root(std::move(g), kk, ctx)) return R.reduce(r0 + ctx.prime * *y, R.pow(ctx.prime, kk));
  }
  return std::nullopt;
}

}  // namespace detail

/// Root of f modulo p^k. Simple roots lift by Newton; singular roots recurse on f(r + p*y)
/// after removing the common power of p, so each level branches over at most deg f residues.
template <class Ring>
RootResult<Ring> has_root_mod_prime_power(const UPoly<Ring>& f, const PrimePower<Ring>& pp) {
  const Ring& R = f.ring();
  auto rf = R.residue_field(pp.prime);
  reduce_mod_prime<Ring>(f, rf);
  detail::LocalContext<Ring> ctx{&R, &rf, pp.prime.value};
  auto r = detail::find_root(f, pp.exponent, ctx);
  if (!r) return {};
  return {true, R.reduce(*r, pp.value(R))};
}

/// Every root modulo p^k, ascending by residue index. Breadth-first over all lifts
/// r + t*p^j; intended for small moduli (tests, oracle cross-checks).
template <class Ring>
std::vector<typename Ring::element_type> all_roots_mod_prime_power(const UPoly<Ring>& f, const PrimePower<Ring>& pp) {
  const Ring& R = f.ring();
  auto rf = R.residue_field(pp.prime);
  FieldPoly fb = reduce_mod_prime<Ring>(f, rf);
  std::vector<typename Ring::element_type> level;
  if (fb.degree() < 1) return level;
  for (const auto& rho : roots(fb)) level.push_back(rf.lift(rho));
  const std::uint64_t np = to_u64(pp.prime.norm);
  auto pj = pp.prime.value;
  for (unsigned j = 1; j < pp.exponent; ++j) {
    auto pj1 = pj * pp.prime.value;
    std::vector<typename Ring::element_type> next;
    for (const auto& r : level) {
      for (std::uint64_t t = 0; t < np; ++t) {
        auto cand = r + R.residue_at(pp.prime.value, t) * pj;
        if (R.is_zero(R.reduce(f.eval(cand), pj1))) next.push_back(R.reduce(cand, pj1));
      }
    }
    level = std::move(next);
    pj = pj1;
  }
  return level;
}

/// Solution of x = r_i mod m_i for pairwise coprime m_i, canonical modulo prod m_i.
template <class Ring>
typename Ring::element_type crt(const Ring& R,
                                const std::vector<std::pair<typename Ring::element_type, typename Ring::element_type>>& rm) {
  auto M = R.one();
  for (const auto& [r, m] : rm) M = M * m;
  auto x = R.zero();
  for (const auto& [r, m] : rm) {
    auto Mi = R.divide_exact(M, m);
    x = x + r * Mi * R.inv_mod(Mi, m);
  }
  return R.reduce(x, M);
}

/// Root modulo every component glued by CRT; nullopt when some component has none.
template <class Ring>
std::optional<typename Ring::element_type> root_mod_modulus(const UPoly<Ring>& f, const Modulus<Ring>& m) {
  const Ring& R = f.ring();
  std::vector<std::pair<typename Ring::element_type, typename Ring::element_type>> rm;
  for (const auto& pp : m.parts) {
    auto res = has_root_mod_prime_power(f, pp);
    if (!res.found) return std::nullopt;
    rm.emplace_back(*res.root, pp.value(R));
  }
  return crt(R, rm);
}

template <class Ring>
bool has_root_mod_modulus(const UPoly<Ring>& f, const Modulus<Ring>& m) {
  for (const auto& pp : m.parts)
    if (!has_root_mod_prime_power(f, pp).found) return false;
  return true;
}

}  // namespace isect
