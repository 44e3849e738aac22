#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "field_poly.hpp"
#include "localroots.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

/// The global field K: Q, or F_q(T) with genus g_K and degree d over F_q(T).
struct FieldProfile {
  bool function_field = false;
  BigInt q = 0;
  unsigned genus = 0;
  unsigned degree = 1;

  static FieldProfile rationals() { return {}; }
  static FieldProfile rational_function_field(const BigInt& q) { return {true, q, 0, 1}; }
};

inline FieldProfile field_profile_of(const IntegerRing&) { return FieldProfile::rationals(); }
inline FieldProfile field_profile_of(const FqTRing& R) { return FieldProfile::rational_function_field(R.q()); }

template <class Ring>
struct DeltaProfile {
  using E = typename Ring::element_type;

  std::vector<UPoly<Ring>> factors;  // distinct irreducible factors g_i
  std::vector<unsigned> degrees;     // n_i
  std::vector<E> resultants;         // res(g_i, g_i')
  E q_product;                       // product of the resultants
  std::vector<std::pair<PrimeElement<Ring>, unsigned>> q_factorization;
  Modulus<Ring> delta;               // prod p_i^(2 b_i + 1)
  BigInt delta_prime = 0;            // sum b_i deg p_i
  BigInt D_prime = 1;                // prod n_i!
  BigInt D_norm = 1;                 // prod |disc g_i|^(D' (n_i - 1) / n_i), integers only
};

/// NotIntersective because of the Galois structure of the splitting field.
enum class GaloisReason { IrreducibleDegGe2, NoRootDegLe4 };

inline const char* galois_reason_name(GaloisReason r) {
  return r == GaloisReason::IrreducibleDegGe2 ? "IrreducibleDegGe2" : "NoRootDegLe4";
}

template <class Ring>
struct TrivialRootInOK {
  typename Ring::element_type root;
};

template <class Ring>
struct DeltaRoot {
  PrimePower<Ring> component;
  typename Ring::element_type root;
};

template <class Ring>
struct ExhaustiveFunctionField {
  unsigned bound = 0;                         // n_max
  std::vector<std::uint64_t> primes_per_degree;  // index n-1
  std::uint64_t primes_checked = 0;
  std::vector<DeltaRoot<Ring>> delta_roots;
  std::optional<typename Ring::element_type> delta_root;  // CRT-glued root mod Delta
};

template <class Ring>
struct FamilyCriterion {
  std::string family;
  std::string details;
  std::vector<DeltaRoot<Ring>> delta_roots;
  std::optional<typename Ring::element_type> delta_root;
};

template <class Ring>
struct ModulusWithoutRoot {
  Modulus<Ring> modulus;
};

template <class Ring>
struct GaloisObstruction {
  GaloisReason reason;
  std::optional<Modulus<Ring>> witness;  // concrete modulus without a root, when one was found
};

struct InconclusiveReport {
  std::string reason;
  BigInt scanned_bound = 0;  // largest prime (integers) or degree (function field) scanned
  std::optional<BigInt> nf_base;
  unsigned nf_exponent = 0;
};

enum class VerdictKind { Intersective, NotIntersective, Inconclusive };

inline const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Intersective: return "Intersective";
    case VerdictKind::NotIntersective: return "NotIntersective";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

template <class Ring>
struct Verdict {
  using Detail = std::variant<TrivialRootInOK<Ring>, ExhaustiveFunctionField<Ring>, FamilyCriterion<Ring>,
                              ModulusWithoutRoot<Ring>, GaloisObstruction<Ring>, InconclusiveReport>;

  Detail detail;
  std::optional<DeltaProfile<Ring>> profile;
  std::optional<unsigned> ff_bound;

  VerdictKind kind() const {
    switch (detail.index()) {
      case 0:
      case 1:
      case 2: return VerdictKind::Intersective;
      case 3:
      case 4: return VerdictKind::NotIntersective;
      default: return VerdictKind::Inconclusive;
    }
  }
  /// Modulus without a root when the verdict carries one.
  std::optional<Modulus<Ring>> witness_modulus() const {
    if (auto* m = std::get_if<ModulusWithoutRoot<Ring>>(&detail)) return m->modulus;
    if (auto* g = std::get_if<GaloisObstruction<Ring>>(&detail)) return g->witness;
    return std::nullopt;
  }
};

struct DecideConfig {
  std::uint64_t max_prime = 10000;           // integer prime scan
  bool force_exhaustive = false;             // skip the degree shortcuts and family analysis
  BigInt max_ff_residues = BigInt(1) << 22;  // q^n_max above this gives Inconclusive
};

// ---------------------------------------------------------------------------------------------

namespace detail {

template <class Ring>
void check_ring(const FieldProfile& field) {
  if (field.function_field != Ring::is_function_field)
    throw error(errc::wrong_ring, "field profile does not match the coefficient ring");
}

template <class Ring>
PrimeElement<Ring> first_prime(const Ring& R) {
  if constexpr (Ring::is_function_field) {
    return R.make_prime(R.T());
  } else {
    return R.make_prime(BigInt(2));
  }
}

template <class Ring>
Modulus<Ring> single(const Ring&, const PrimeElement<Ring>& p, unsigned e) {
  return Modulus<Ring>{{PrimePower<Ring>{p, e}}};
}

// Least exponent e <= max_e with no root mod p^e, if any.
template <class Ring>
std::optional<unsigned> least_rootless_exponent(const UPoly<Ring>& f, const PrimeElement<Ring>& p, unsigned max_e) {
  if (has_root_mod_prime_power(f, PrimePower<Ring>{p, max_e}).found) return std::nullopt;
  for (unsigned e = 1; e < max_e; ++e)
    if (!has_root_mod_prime_power(f, PrimePower<Ring>{p, e}).found) return e;
  return max_e;
}

}  // namespace detail

/// Delta-profile of the radical of fp.
template <class Ring>
DeltaProfile<Ring> build_delta_profile(const FactoredPolynomial<Ring>& fp) {
  const Ring& R = fp.original.ring();
  DeltaProfile<Ring> prof;
  prof.q_product = R.one();
  for (const auto& e : fp.factors) {
    if (!e.separable) throw error(errc::inseparable_factor, e.g.to_string() + " is inseparable");
    const UPoly<Ring>& g = e.g;
    auto r = resultant(g, g.derivative());
    if (R.is_zero(r)) throw error(errc::inseparable_factor, g.to_string() + " has zero discriminant");
    prof.factors.push_back(g);
    prof.degrees.push_back(static_cast<unsigned>(g.degree()));
    prof.resultants.push_back(r);
    prof.q_product = prof.q_product * r;
    prof.D_prime *= factorial(static_cast<unsigned>(g.degree()));
  }
  if (!R.is_unit(prof.q_product)) {
    for (auto& [p, b] : R.factorize(prof.q_product).factors) {
      prof.q_factorization.emplace_back(p, b);
      prof.delta.parts.push_back(PrimePower<Ring>{p, 2 * b + 1});
      prof.delta_prime += BigInt(b) * p.degree;
    }
  }
  if constexpr (!Ring::is_function_field) {
    for (std::size_t i = 0; i < prof.factors.size(); ++i) {
      const unsigned n = prof.degrees[i];
      if (n < 2) continue;
      BigInt disc = isect::abs(R.divide_exact(prof.resultants[i], prof.factors[i].lead()));
      BigInt ex = prof.D_prime * (n - 1) / n;
      prof.D_norm *= isect::pow(disc, static_cast<std::uint64_t>(ex));
    }
    prof.delta_prime = 0;
  }
  return prof;
}

/// Least n with q^n >= (2 Delta' + 2 d D' + 8 g_K D' + 4)^2, i.e. ceil(2 log_q(...)).
template <class Ring>
unsigned ff_prime_bound(const DeltaProfile<Ring>& prof, const FieldProfile& field) {
  if (!field.function_field) throw error(errc::wrong_ring, "the prime-degree bound needs a function field");
  const BigInt arg = 2 * prof.delta_prime + 2 * BigInt(field.degree) * prof.D_prime +
                     8 * BigInt(field.genus) * prof.D_prime + 4;
  const BigInt target = arg * arg;
  unsigned n = 0;
  BigInt qn = 1;
  while (qn < target) {
    qn *= field.q;
    ++n;
  }
  return n;
}

/// Bound N(D)^12577 on the least prime to check over Q, kept symbolic.
template <class Ring>
std::pair<BigInt, unsigned> nf_bound(const DeltaProfile<Ring>& prof, const FieldProfile& field) {
  if (field.function_field) throw error(errc::wrong_ring, "the norm bound applies to the integers");
  return {prof.D_norm, 12577U};
}

template <class Ring>
std::pair<BigInt, unsigned> nf_bound(const DeltaProfile<Ring>& prof) {
  if constexpr (Ring::is_function_field) throw error(errc::wrong_ring, "the norm bound applies to the integers");
  return {prof.D_norm, 12577U};
}

/// Degree shortcuts on the radical: an irreducible of degree >= 2, or total degree <= 4 with no
/// root in the ring. Reason only, no witness search.
template <class Ring>
std::optional<GaloisReason> degree_shortcut_reason(const FactoredPolynomial<Ring>& fp) {
  if (fp.factors.empty()) return std::nullopt;
  if (fp.factors.size() == 1 && fp.factors[0].multiplicity == 1 && fp.factors[0].g.degree() >= 2)
    return GaloisReason::IrreducibleDegGe2;
  int deg = 0;
  bool linear = false;
  for (const auto& e : fp.factors) {
    deg += e.g.degree();
    if (e.g.degree() == 1) linear = true;
  }
  if (deg <= 4 && !linear) return GaloisReason::NoRootDegLe4;
  return std::nullopt;
}

namespace detail {

// First prime (in canonical order, within the bound) modulo which f has no root.
template <class Ring>
std::optional<PrimeElement<Ring>> scan_primes_for_witness(const UPoly<Ring>& f, std::uint64_t bound) {
  const Ring& R = f.ring();
  std::optional<PrimeElement<Ring>> hit;
  if constexpr (Ring::is_function_field) {
    for_each_monic_irreducible(R.field(), static_cast<unsigned>(bound), [&](const FieldPoly& P) {
      PrimeElement<Ring> pe = R.make_prime(P);
      if (!has_root_mod_prime(f, pe).found) {
        hit = pe;
        return false;
      }
      return true;
    });
  } else {
    for (std::uint32_t p : small_primes()) {
      if (p > bound) break;
      PrimeElement<Ring> pe{BigInt(p), 1, BigInt(p)};
      if (!has_root_mod_prime(f, pe).found) {
        hit = pe;
        break;
      }
    }
  }
  return hit;
}

}  // namespace detail

/// Degree-shortcut verdict with a concrete witness when one is found: a prime within
/// the scan bound, else the least rootless power of a Delta prime.
template <class Ring>
std::optional<Verdict<Ring>> degree_shortcut(const FactoredPolynomial<Ring>& fp, const DecideConfig& config = {}) {
  auto reason = degree_shortcut_reason(fp);
  if (!reason) return std::nullopt;
  const Ring& R = fp.original.ring();
  const UPoly<Ring> rad = fp.radical();
  GaloisObstruction<Ring> g{*reason, std::nullopt};
  Verdict<Ring> v{g, std::nullopt, std::nullopt};
  std::uint64_t bound = config.max_prime;
  DeltaProfile<Ring> prof = build_delta_profile(fp);
  if constexpr (Ring::is_function_field) {
    const FieldProfile field = field_profile_of(R);
    bound = ff_prime_bound(prof, field);
    v.ff_bound = static_cast<unsigned>(bound);
    while (bound > 1 && isect::pow(R.q(), bound) > config.max_ff_residues) --bound;
  }
  if (auto p = detail::scan_primes_for_witness(rad, bound)) {
    g.witness = detail::single(R, *p, 1);
  } else {
    for (const auto& pp : prof.delta.parts) {
      if (auto e = detail::least_rootless_exponent(rad, pp.prime, pp.exponent)) {
        g.witness = detail::single(R, pp.prime, *e);
        break;
      }
    }
  }
  v.detail = g;
  v.profile = std::move(prof);
  return v;
}

namespace detail {

template <class Ring>
std::optional<typename Ring::element_type> pure_square_constant(const UPoly<Ring>& g) {
  const Ring& R = g.ring();
  if (g.degree() != 2 || !(g.lead() == R.one()) || !R.is_zero(g.coeff(1))) return std::nullopt;
  return -g.coeff(0);
}

template <class Ring>
std::optional<PrimeElement<Ring>> prime_up_to_unit(const Ring& R, const typename Ring::element_type& a) {
  if (R.is_zero(a) || R.is_unit(a)) return std::nullopt;
  auto fac = R.factorize(a);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1) return std::nullopt;
  return fac.factors[0].first;
}

template <class Ring>
std::vector<DeltaRoot<Ring>> delta_roots(const UPoly<Ring>& f, const Modulus<Ring>& delta,
                                         std::type_identity_t<std::optional<PrimePower<Ring>>>* failing) {
  std::vector<DeltaRoot<Ring>> out;
  for (const auto& pp : delta.parts) {
    auto r = has_root_mod_prime_power(f, pp);
    if (!r.found) {
      if (failing) *failing = pp;
      return out;
    }
    out.push_back({pp, *r.root});
  }
  return out;
}

template <class Ring>
typename Ring::element_type glue(const Ring& R, const std::vector<DeltaRoot<Ring>>& roots) {
  std::vector<std::pair<typename Ring::element_type, typename Ring::element_type>> rm;
  for (const auto& dr : roots) rm.emplace_back(dr.root, dr.component.value(R));
  return crt(R, rm);
}

}  // namespace detail

/// Exact criterion for radicals (x^2 - a)(x^2 - b)(x^2 - ab) with a, b non-associate primes, in
/// odd characteristic or over Z: a square mod b^5 and b square mod a^5; over Z also a root of
/// f at the remaining Delta components (the power of 2), which the square conditions miss.
template <class Ring>
std::optional<Verdict<Ring>> analyze_multiquadratic(const FactoredPolynomial<Ring>& fp) {
  const Ring& R = fp.original.ring();
  using E = typename Ring::element_type;
  if (fp.factors.size() != 3) return std::nullopt;
  if constexpr (Ring::is_function_field) {
    if (R.characteristic() == 2) return std::nullopt;
  }
  std::vector<E> c;
  for (const auto& e : fp.factors) {
    auto v = detail::pure_square_constant(e.g);
    if (!v) return std::nullopt;
    c.push_back(*v);
  }
  static const int perms[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& pm : perms) {
    E t1 = c[pm[0]];
    E t2 = c[pm[1]];
    if (!(c[pm[2]] == t1 * t2)) continue;
    if (R.less(t2, t1)) std::swap(t1, t2);
    auto p1 = detail::prime_up_to_unit(R, t1);
    auto p2 = detail::prime_up_to_unit(R, t2);
    if (!p1 || !p2 || p1->value == p2->value) continue;

    const UPoly<Ring> rad = fp.radical();
    DeltaProfile<Ring> prof = build_delta_profile(fp);
    const UPoly<Ring> x = UPoly<Ring>::x(R);
    auto sq = [&](const E& t) { return x * x - UPoly<Ring>::constant(R, t); };
    const bool c1 = has_root_mod_prime_power(sq(t1), PrimePower<Ring>{*p2, 5}).found;
    const bool c2 = has_root_mod_prime_power(sq(t2), PrimePower<Ring>{*p1, 5}).found;
    bool extra = true;
    std::string extra_text;
    for (const auto& pp : prof.delta.parts) {
      if (pp.prime.value == p1->value || pp.prime.value == p2->value) continue;
      const bool ok = has_root_mod_prime_power(rad, pp).found;
      extra = extra && ok;
      extra_text += "; root mod " + to_string(R, pp) + (ok ? " found" : " missing");
    }
    Verdict<Ring> v{InconclusiveReport{}, std::nullopt, std::nullopt};
    if (c1 && c2 && extra) {
      FamilyCriterion<Ring> fc;
      fc.family = "multiquadratic";
      fc.details = "theta1 = " + R.to_string(t1) + ", theta2 = " + R.to_string(t2) +
                   "; theta1 is a square mod theta2^5 and theta2 is a square mod theta1^5" + extra_text;
      fc.delta_roots = detail::delta_roots(rad, prof.delta, nullptr);
      fc.delta_root = detail::glue(R, fc.delta_roots);
      v.detail = std::move(fc);
    } else {
      // Some Delta component then has no root of f; report its least rootless power.
      ModulusWithoutRoot<Ring> w;
      for (const auto& pp : prof.delta.parts) {
        if (auto e = detail::least_rootless_exponent(rad, pp.prime, pp.exponent)) {
          w.modulus = detail::single(R, pp.prime, *e);
          break;
        }
      }
      if (w.modulus.empty()) throw error(errc::unsupported, "multiquadratic criterion without a Delta witness");
      v.detail = std::move(w);
    }
    v.profile = std::move(prof);
    return v;
  }
  return std::nullopt;
}

/// The decision pipeline. Negative verdicts carry a modulus without a root of the input f.
/// Decision from a factorization content * prod g_i^e_i of f (as produced by
/// factor_with_flags or verify_factored_input).
template <class Ring>
Verdict<Ring> decide_factored(const FactoredPolynomial<Ring>& fp, const FieldProfile& field,
                              const DecideConfig& config = {}) {
  detail::check_ring<Ring>(field);
  if (field.genus != 0 || field.degree != 1)
    throw error(errc::unsupported, "only K = F_q(T) is implemented among function fields");
  const Ring& R = fp.original.ring();
  using E = typename Ring::element_type;
  const E content_ = R.normal_part(fp.content);

  // A witness modulus m for pp(f) becomes content * m for f.
  auto for_input = [&](Verdict<Ring> v) {
    if (R.is_unit(content_)) return v;
    auto scale = [&](Modulus<Ring>& m) {
      for (auto& [p, b] : R.factorize(content_).factors) {
        bool merged = false;
        for (auto& part : m.parts)
          if (part.prime.value == p.value) {
            part.exponent += b;
            merged = true;
          }
        if (!merged) m.parts.push_back(PrimePower<Ring>{p, b});
      }
      std::sort(m.parts.begin(), m.parts.end(),
                [&](const auto& a, const auto& b) { return R.less(a.prime.value, b.prime.value); });
    };
    if (auto* m = std::get_if<ModulusWithoutRoot<Ring>>(&v.detail)) scale(m->modulus);
    if (auto* g = std::get_if<GaloisObstruction<Ring>>(&v.detail))
      if (g->witness) scale(*g->witness);
    return v;
  };

  if (fp.factors.empty()) {
    // A non-zero constant: no root modulo p^(v_p(content) + 1).
    PrimeElement<Ring> p = detail::first_prime(R);
    return for_input(Verdict<Ring>{ModulusWithoutRoot<Ring>{detail::single(R, p, 1)}, std::nullopt, std::nullopt});
  }

  for (const auto& e : fp.factors) {
    if (e.g.degree() == 1 && R.is_unit(e.g.lead())) {
      E root = R.divide_exact(-e.g.coeff(0), e.g.lead());
      return Verdict<Ring>{TrivialRootInOK<Ring>{root}, std::nullopt, std::nullopt};
    }
  }
  for (const auto& e : fp.factors)
    if (!e.separable) throw error(errc::inseparable_factor, e.g.to_string() + " is inseparable");

  if (!config.force_exhaustive)
    if (auto v = degree_shortcut(fp, config)) return for_input(std::move(*v));

  const UPoly<Ring> rad = fp.radical();
  DeltaProfile<Ring> prof = build_delta_profile(fp);
  std::optional<PrimePower<Ring>> failing;
  auto droots = detail::delta_roots(rad, prof.delta, &failing);
  if (failing) {
    auto e = detail::least_rootless_exponent(rad, failing->prime, failing->exponent);
    Verdict<Ring> v{ModulusWithoutRoot<Ring>{detail::single(R, failing->prime, e.value_or(failing->exponent))},
                    std::move(prof), std::nullopt};
    if constexpr (Ring::is_function_field) v.ff_bound = ff_prime_bound(*v.profile, field);
    return for_input(std::move(v));
  }

  if constexpr (Ring::is_function_field) {
    const unsigned n_max = ff_prime_bound(prof, field);
    if (isect::pow(field.q, n_max) > config.max_ff_residues) {
      InconclusiveReport rep{"prime-degree bound " + std::to_string(n_max) + " exceeds the enumeration cap", 0,
                             std::nullopt, 0};
      return Verdict<Ring>{rep, std::move(prof), n_max};
    }
    ExhaustiveFunctionField<Ring> cert;
    cert.bound = n_max;
    cert.primes_per_degree.assign(n_max, 0);
    std::optional<PrimeElement<Ring>> hit;
    for_each_monic_irreducible(R.field(), n_max, [&](const FieldPoly& P) {
      PrimeElement<Ring> pe{P, static_cast<unsigned>(P.degree()), isect::pow(R.q(), static_cast<unsigned>(P.degree()))};
      if (!has_root_mod_prime(rad, pe).found) {
        hit = pe;
        return false;
      }
      ++cert.primes_per_degree[pe.degree - 1];
      ++cert.primes_checked;
      return true;
    });
    if (hit) return for_input(Verdict<Ring>{ModulusWithoutRoot<Ring>{detail::single(R, *hit, 1)}, std::move(prof), n_max});
    cert.delta_roots = std::move(droots);
    cert.delta_root = detail::glue(R, cert.delta_roots);
    return Verdict<Ring>{std::move(cert), std::move(prof), n_max};
  } else {
    bool all_linear = true;
    for (const auto& e : fp.factors) all_linear = all_linear && e.g.degree() == 1;
    if (all_linear) {
      FamilyCriterion<Ring> fc{"linear", "every factor is linear, the splitting field is Q and the Delta condition suffices",
                               droots, detail::glue(R, droots)};
      return Verdict<Ring>{std::move(fc), std::move(prof), std::nullopt};
    }
    if (!config.force_exhaustive)
      if (auto v = analyze_multiquadratic(fp)) return for_input(std::move(*v));
    if (auto p = detail::scan_primes_for_witness(rad, config.max_prime))
      return for_input(Verdict<Ring>{ModulusWithoutRoot<Ring>{detail::single(R, *p, 1)}, std::move(prof), std::nullopt});
    auto [base, ex] = nf_bound(prof, field);
    InconclusiveReport rep{"roots exist modulo Delta and every prime up to the scan limit; the proven bound is N(D)^12577",
                           BigInt(config.max_prime), base, ex};
    return Verdict<Ring>{rep, std::move(prof), std::nullopt};
  }
}

template <class Ring>
Verdict<Ring> decide(const UPoly<Ring>& f, const FieldProfile& field, const DecideConfig& config = {}) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "the zero polynomial has a root everywhere but is excluded");
  if (f.degree() == 0) {
    FactoredPolynomial<Ring> fp{f.lead(), {}, f};
    return decide_factored(fp, field, config);
  }
  return decide_factored(factor_with_flags(f), field, config);
}

template <class Ring>
Verdict<Ring> decide(const UPoly<Ring>& f, const DecideConfig& config = {}) {
  return decide(f, field_profile_of(f.ring()), config);
}

struct DensityRow {
  std::uint64_t bucket = 0;  // prime degree (function field) or bit length (integers)
  std::uint64_t primes = 0;
  std::uint64_t with_root = 0;
  double fraction() const { return primes ? static_cast<double>(with_root) / static_cast<double>(primes) : 0.0; }
};

/// Fraction of primes with a root of f, per prime degree up to `limit` (function field) or per
/// bit length of primes up to `limit` (integers).
template <class Ring>
std::vector<DensityRow> prime_density_diagnostic(const UPoly<Ring>& f, std::uint64_t limit) {
  const Ring& R = f.ring();
  const UPoly<Ring> g = primitive_part(f);
  std::vector<DensityRow> rows;
  if constexpr (Ring::is_function_field) {
    rows.resize(limit);
    for (std::uint64_t n = 0; n < limit; ++n) rows[n].bucket = n + 1;
    for_each_monic_irreducible(R.field(), static_cast<unsigned>(limit), [&](const FieldPoly& P) {
      auto& row = rows[P.degree() - 1];
      ++row.primes;
      PrimeElement<Ring> pe{P, static_cast<unsigned>(P.degree()), isect::pow(R.q(), static_cast<unsigned>(P.degree()))};
      if (has_root_mod_prime(g, pe).found) ++row.with_root;
      return true;
    });
  } else {
    for (std::uint32_t p : small_primes()) {
      if (p > limit) break;
      std::uint64_t bits = 0;
      for (std::uint64_t v = p; v; v >>= 1) ++bits;
      if (rows.empty() || rows.back().bucket != bits) rows.push_back({bits, 0, 0});
      ++rows.back().primes;
      if (has_root_mod_prime(g, PrimeElement<Ring>{BigInt(p), 1, BigInt(p)}).found) ++rows.back().with_root;
    }
  }
  return rows;
}

}  // namespace isect
