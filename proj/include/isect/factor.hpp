#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "field_poly.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

template <class Ring>
struct FactorEntry {
  UPoly<Ring> g;
  unsigned multiplicity = 1;
  bool separable = true;
};

/// content * prod g_i^{e_i} = original, each g_i primitive irreducible with normalized
/// leading coefficient, listed by degree and then coefficients.
template <class Ring>
struct FactoredPolynomial {
  typename Ring::element_type content;
  std::vector<FactorEntry<Ring>> factors;
  UPoly<Ring> original;

  UPoly<Ring> expand() const {
    const Ring& R = original.ring();
    UPoly<Ring> acc = UPoly<Ring>::constant(R, content);
    for (const auto& f : factors)
      for (unsigned i = 0; i < f.multiplicity; ++i) acc *= f.g;
    return acc;
  }
  /// Product of the distinct irreducible factors.
  UPoly<Ring> radical() const {
    const Ring& R = original.ring();
    UPoly<Ring> acc = UPoly<Ring>::constant(R, R.one());
    for (const auto& f : factors) acc *= f.g;
    return acc;
  }
  bool all_separable() const {
    return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.separable; });
  }
};

template <class Ring>
struct SquarefreePart {
  UPoly<Ring> part;
  unsigned multiplicity = 1;
  bool zero_derivative = false;
};

template <class Ring>
bool poly_less(const UPoly<Ring>& a, const UPoly<Ring>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Ring& R = a.ring();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] == b.coeffs()[i]) continue;
    return R.less(a.coeffs()[i], b.coeffs()[i]);
  }
  return false;
}

namespace detail {

template <class Ring>
UPoly<Ring> exact_quotient(const UPoly<Ring>& a, const UPoly<Ring>& b) {
  auto q = divide_exact(a, b);
  if (!q) throw error(errc::unsupported, "inexact division in factorization");
  return *q;
}

/// Primitive gcd in K[x] via the primitive pseudo-remainder sequence, normalized.
template <class Ring>
UPoly<Ring> gcd_primitive(UPoly<Ring> a, UPoly<Ring> b) {
  const Ring R = a.ring();
  if (a.is_zero()) return canonical_primitive(b);
  if (b.is_zero()) return canonical_primitive(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UPoly<Ring>::constant(R, R.one());
    UPoly<Ring> r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : primitive_part(r);
  }
  return canonical_primitive(a);
}

template <class Ring>
UPoly<Ring> reduce_coeffs(const UPoly<Ring>& f, const typename Ring::element_type& m) {
  const Ring& R = f.ring();
  std::vector<typename Ring::element_type> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(R.reduce(a, m));
  return UPoly<Ring>(R, std::move(c));
}

template <class Ring>
UPoly<Ring> reduce_coeffs_symmetric(const UPoly<Ring>& f, const typename Ring::element_type& m) {
  const Ring& R = f.ring();
  std::vector<typename Ring::element_type> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(R.reduce_symmetric(a, m));
  return UPoly<Ring>(R, std::move(c));
}

template <class Ring>
struct LiftContext {
  const typename Ring::residue_field_type* rf;
  typename Ring::element_type prime;
};

// Lift F = A*B mod prime (A, B monic, coprime mod prime) to modulus prime^k.
template <class Ring>
std::pair<UPoly<Ring>, UPoly<Ring>> hensel_two(const UPoly<Ring>& F, const FieldPoly& a0, const FieldPoly& b0,
                                               const LiftContext<Ring>& ctx, unsigned k) {
  const Ring& R = F.ring();
  const auto& rf = *ctx.rf;
  auto [g, s, t] = xgcd(a0, b0);
  if (!g.is_one()) throw error(errc::unsupported, "Hensel factors not coprime");
  UPoly<Ring> A = lift_poly(R, a0, rf), B = lift_poly(R, b0, rf);
  auto pj = ctx.prime;
  for (unsigned j = 1; j < k; ++j) {
    auto pj1 = pj * ctx.prime;
    UPoly<Ring> E = reduce_coeffs(F - A * B, pj1).divided_by(pj);
    FieldPoly e = image(E, rf);
    if (!e.is_zero()) {
      FieldPoly da = (t * e) % a0;
      FieldPoly db = (s * e) % b0;
      A = reduce_coeffs(A + lift_poly(R, da, rf).scaled(pj), pj1);
      B = reduce_coeffs(B + lift_poly(R, db, rf).scaled(pj), pj1);
    }
    pj = pj1;
  }
  return {A, B};
}

template <class Ring>
void hensel_multi(const UPoly<Ring>& F, const std::vector<FieldPoly>& mods, std::size_t lo, std::size_t hi,
                  const LiftContext<Ring>& ctx, unsigned k, std::vector<UPoly<Ring>>& out) {
  if (hi - lo == 1) {
    out[lo] = F;
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const FieldPtr& fp = ctx.rf->field();
  FieldPoly a0 = FieldPoly::one(fp), b0 = FieldPoly::one(fp);
  for (std::size_t i = lo; i < mid; ++i) a0 *= mods[i];
  for (std::size_t i = mid; i < hi; ++i) b0 *= mods[i];
  auto [A, B] = hensel_two(F, a0, b0, ctx, k);
  hensel_multi(A, mods, lo, mid, ctx, k, out);
  hensel_multi(B, mods, mid, hi, ctx, k, out);
}

template <class Ring>
unsigned t_degree(const UPoly<Ring>& f) {
  int d = 0;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return static_cast<unsigned>(d);
}

// Advances a strictly increasing index tuple over [0, n); false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Irreducible factors of a primitive separable squarefree s (Zassenhaus).
template <class Ring>
std::vector<UPoly<Ring>> separable_factor(const UPoly<Ring>& s_in) {
  const Ring R = s_in.ring();
  using E = typename Ring::element_type;
  UPoly<Ring> s = canonical_primitive(s_in);
  if (s.degree() <= 1) return {s};
  const E lc = s.lead();

  using RF = typename Ring::residue_field_type;
  std::optional<RF> best_rf;
  std::vector<FieldPoly> best_mods;
  std::optional<E> best_prime;
  unsigned good = 0;
  bool irreducible = false;

  auto consider = [&](const E& pv) {
    PrimeElement<Ring> pe = R.make_prime(pv);
    if (R.divides(pe.value, lc)) return true;
    RF rf = R.residue_field(pe);
    FieldPoly sb = image(s, rf);
    if (sb.degree() != s.degree()) return true;
    if (gcd(sb, sb.derivative()).degree() > 0) return true;
    auto fac = factor(sb);
    ++good;
    if (!best_rf || fac.factors.size() < best_mods.size()) {
      best_mods.clear();
      for (auto& [g, e] : fac.factors) best_mods.push_back(g);
      best_rf.emplace(rf);
      best_prime = pe.value;
    }
    if (best_mods.size() == 1) irreducible = true;
    return !irreducible && good < 5;
  };

  if constexpr (Ring::is_function_field) {
    // Evaluation primes of increasing degree; only finitely many divide lc * disc.
    for_each_monic_irreducible(R.field(), 64, [&](const FieldPoly& P) { return consider(P); });
  } else {
    for (std::uint32_t p : small_primes()) {
      if (!consider(BigInt(p))) break;
      if (good == 0 && p > 100000) break;
    }
  }
  if (!best_rf) throw error(errc::unsupported, "no good reduction prime found");
  if (irreducible) return {s};

  const RF& rf = *best_rf;
  const E prime = *best_prime;
  unsigned k = 1;
  E modulus = prime;
  if constexpr (Ring::is_function_field) {
    const unsigned dp = static_cast<unsigned>(prime.degree());
    k = 2 * t_degree(s) / dp + 1;
    modulus = R.pow(prime, k);
  } else {
    BigInt norm2 = 0;
    for (const auto& c : s.coeffs()) norm2 += c * c;
    BigInt bound = 2 * isect::abs(lc) * isect::pow(BigInt(2), static_cast<unsigned>(s.degree())) * (isqrt(norm2) + 1);
    while (modulus <= bound) {
      modulus *= prime;
      ++k;
    }
  }

  // Monic target lc^{-1} s modulo prime^k.
  UPoly<Ring> F = reduce_coeffs(s.scaled(R.inv_mod(lc, modulus)), modulus);
  LiftContext<Ring> ctx{&rf, prime};
  std::vector<UPoly<Ring>> lifted(best_mods.size(), UPoly<Ring>(R));
  hensel_multi(F, best_mods, 0, best_mods.size(), ctx, k, lifted);

  std::vector<UPoly<Ring>> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  UPoly<Ring> rest = s;
  std::size_t d = 1;
  while (2 * d <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      UPoly<Ring> cand = UPoly<Ring>::constant(R, rest.lead());
      for (std::size_t i : pick) cand = reduce_coeffs(cand * lifted[remaining[i]], modulus);
      cand = reduce_coeffs_symmetric(cand, modulus);
      if (cand.degree() > 0) {
        UPoly<Ring> g = primitive_part(cand);
        if (auto q = divide_exact(rest, g)) {
          out.push_back(canonical_primitive(g));
          rest = *q;
          std::vector<std::size_t> next;
          for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < d && pick[j] == i) {
              ++j;
              continue;
            }
            next.push_back(remaining[i]);
          }
          remaining = std::move(next);
          found = true;
          break;
        }
      }
      if (!next_combination(pick, remaining.size())) break;
    }
    if (!found) ++d;
  }
  if (rest.degree() > 0) out.push_back(canonical_primitive(rest));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a, b); });
  return out;
}

template <class Ring>
void add_factor(std::vector<FactorEntry<Ring>>& acc, const UPoly<Ring>& g, unsigned mult, bool separable) {
  UPoly<Ring> c = canonical_primitive(g);
  for (auto& e : acc) {
    if (e.g == c) {
      e.multiplicity += mult;
      return;
    }
  }
  acc.push_back({std::move(c), mult, separable});
}

template <class Ring>
std::optional<UPoly<Ring>> coefficient_pth_root(const UPoly<Ring>& g) {
  const Ring& R = g.ring();
  std::vector<typename Ring::element_type> c;
  for (const auto& a : g.coeffs()) {
    auto r = R.pth_root(a);
    if (!r) return std::nullopt;
    c.push_back(std::move(*r));
  }
  return UPoly<Ring>(R, std::move(c));
}

}  // namespace detail

/// Square-free decomposition of primitive f. In characteristic p the leftover part whose
/// derivative vanishes (f = h(x^p)) is returned with zero_derivative set.
template <class Ring>
std::vector<SquarefreePart<Ring>> squarefree_split(const UPoly<Ring>& f) {
  std::vector<SquarefreePart<Ring>> out;
  if (f.degree() < 1) return out;
  UPoly<Ring> df = f.derivative();
  if (df.is_zero()) {
    out.push_back({canonical_primitive(f), 1, true});
    return out;
  }
  UPoly<Ring> c = detail::gcd_primitive(f, df);
  UPoly<Ring> w = detail::exact_quotient(primitive_part(f), c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly<Ring> y = detail::gcd_primitive(w, c);
    UPoly<Ring> z = detail::exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({canonical_primitive(z), i, false});
    ++i;
    w = y;
    c = detail::exact_quotient(c, y);
  }
  if (c.degree() > 0) out.push_back({canonical_primitive(c), 1, true});
  return out;
}

/// Irreducible factors of primitive f with multiplicities; inseparable factors are reported,
/// not rejected.
template <class Ring>
std::vector<FactorEntry<Ring>> factor_full(const UPoly<Ring>& f) {
  std::vector<FactorEntry<Ring>> acc;
  if (f.degree() < 1) return acc;
  for (const auto& part : squarefree_split(f)) {
    if (!part.zero_derivative) {
      for (const auto& g : detail::separable_factor(part.part)) detail::add_factor(acc, g, part.multiplicity, true);
      continue;
    }
    if constexpr (Ring::is_function_field) {
      const auto p = static_cast<unsigned>(f.ring().characteristic());
      UPoly<Ring> h = *part.part.deflate(p);
      for (const auto& inner : factor_full(h)) {
        const unsigned m = inner.multiplicity * part.multiplicity;
        if (auto r = detail::coefficient_pth_root(inner.g)) {
          detail::add_factor(acc, *r, m * p, !r->derivative().is_zero());
        } else {
          detail::add_factor(acc, inner.g.inflate(p), m, false);
        }
      }
    } else {
      throw error(errc::unsupported, "vanishing derivative in characteristic zero");
    }
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return poly_less(a.g, b.g); });
  return acc;
}

namespace detail {

template <class Ring>
FactoredPolynomial<Ring> assemble(const UPoly<Ring>& f, std::vector<FactorEntry<Ring>> factors) {
  const Ring& R = f.ring();
  FactoredPolynomial<Ring> out{R.one(), std::move(factors), f};
  auto lc = R.one();
  for (const auto& e : out.factors) lc = lc * R.pow(e.g.lead(), e.multiplicity);
  auto c = R.divide(f.lead(), lc);
  if (!c) throw error(errc::unsupported, "leading coefficient mismatch");
  out.content = *c;
  return out;
}

}  // namespace detail

/// Complete factorization over the fraction field with Gauss-normalized factors.
/// Throws InseparableFactor when some irreducible factor has zero derivative.
template <class Ring>
FactoredPolynomial<Ring> factor_irreducible(const UPoly<Ring>& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot factor the zero polynomial");
  auto factors = factor_full(primitive_part(f));
  for (const auto& e : factors)
    if (!e.separable) throw error(errc::inseparable_factor, e.g.to_string() + " is inseparable");
  return detail::assemble(f, std::move(factors));
}

/// Like factor_irreducible but keeps inseparable factors (flagged).
template <class Ring>
FactoredPolynomial<Ring> factor_with_flags(const UPoly<Ring>& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot factor the zero polynomial");
  return detail::assemble(f, factor_full(primitive_part(f)));
}

/// Accepts a claimed factorization when its product equals f up to a unit and every claimed
/// factor is irreducible over the fraction field.
template <class Ring>
FactoredPolynomial<Ring> verify_factored_input(const std::vector<std::pair<UPoly<Ring>, unsigned>>& claimed,
                                               const UPoly<Ring>& f) {
  const Ring& R = f.ring();
  if (f.is_zero()) throw error(errc::zero_polynomial, "cannot verify a factorization of zero");
  UPoly<Ring> prod = UPoly<Ring>::constant(R, R.one());
  for (const auto& [g, e] : claimed) {
    g.same_ring(f);
    for (unsigned i = 0; i < e; ++i) prod *= g;
  }
  auto q = divide_exact(f, prod);
  if (!q || q->degree() != 0 || !R.is_unit(q->lead()))
    throw error(errc::product_mismatch, "claimed factors do not multiply to " + f.to_string());
  std::vector<FactorEntry<Ring>> entries;
  for (const auto& [g, e] : claimed) {
    if (e == 0) continue;
    if (g.degree() < 1) {
      if (!R.is_unit(g.lead())) throw error(errc::reducible_claimed_factor, g.to_string() + " is not a unit");
      continue;
    }
    auto parts = factor_full(primitive_part(g));
    if (parts.size() != 1 || parts[0].multiplicity != 1)
      throw error(errc::reducible_claimed_factor, g.to_string() + " is reducible");
    detail::add_factor(entries, parts[0].g, e, parts[0].separable);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return poly_less(a.g, b.g); });
  return detail::assemble(f, std::move(entries));
}

}  // namespace isect
