#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "finite_field.hpp"

namespace isect {

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Dense univariate polynomial over a finite field, lowest degree first.
/// Serves both as an element of F_q[T] and as a polynomial over a residue field.
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(FieldPtr field) : field_(std::move(field)) {}
  FieldPoly(FieldPtr field, std::vector<FFElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) field_->check(c);
    trim();
  }

  static FieldPoly constant(FieldPtr field, FFElement c) { return FieldPoly(std::move(field), {std::move(c)}); }
  static FieldPoly monomial(FieldPtr field, FFElement c, unsigned deg) {
    std::vector<FFElement> v(deg + 1, field->zero());
    v[deg] = std::move(c);
    return FieldPoly(std::move(field), std::move(v));
  }
  static FieldPoly x(FieldPtr field) {
    FFElement one = field->one();
    return monomial(std::move(field), std::move(one), 1);
  }
  static FieldPoly one(FieldPtr field) {
    FFElement o = field->one();
    return constant(std::move(field), std::move(o));
  }
  /// Integer coefficients (lowest degree first) reduced into the prime subfield.
  static FieldPoly from_ints(FieldPtr field, const std::vector<long long>& coeffs) {
    std::vector<FFElement> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(field->from_int(c));
    return FieldPoly(std::move(field), std::move(v));
  }

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const FiniteField& field() const noexcept { return *field_; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && field_->is_one(coeffs_[0]); }
  bool is_monic() const { return !coeffs_.empty() && field_->is_one(coeffs_.back()); }

  const std::vector<FFElement>& coeffs() const noexcept { return coeffs_; }
  FFElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  FFElement lead() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

  bool operator==(const FieldPoly& other) const {
    if (coeffs_ != other.coeffs_) return false;
    if (field_ == other.field_) return true;
    if (!field_ || !other.field_) return coeffs_.empty();
    return *field_ == *other.field_;
  }

  void same_field(const FieldPoly& other) const {
    if (field_ == other.field_) return;
    if (!field_ || !other.field_ || !(*field_ == *other.field_))
      throw error(errc::spec_mismatch, "polynomials over different fields");
  }

  FieldPoly& operator+=(const FieldPoly& b) {
    same_field(b);
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], b.coeffs_[i]);
    trim();
    return *this;
  }
  FieldPoly& operator-=(const FieldPoly& b) {
    same_field(b);
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_->zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], b.coeffs_[i]);
    trim();
    return *this;
  }
  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  FieldPoly operator-() const {
    FieldPoly r = *this;
    for (auto& c : r.coeffs_) c = field_->neg(c);
    return r;
  }

  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    a.same_field(b);
    if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_ ? a.field_ : b.field_);
    const FiniteField& F = *a.field_;
    const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (F.is_prime_field()) {
      const std::uint64_t p = F.characteristic();
      std::vector<unsigned __int128> acc(n, 0);
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        std::uint64_t ai = a.coeffs_[i][0];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
          acc[i + j] += static_cast<unsigned __int128>(ai) * b.coeffs_[j][0];
          if (acc[i + j] >> 120) acc[i + j] %= p;
        }
      }
      std::vector<FFElement> out;
      out.reserve(n);
      for (auto v : acc) out.emplace_back(FFElement::storage_type{static_cast<std::uint64_t>(v % p)});
      return FieldPoly(a.field_, std::move(out));
    }
    std::vector<FFElement> out(n, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (F.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return FieldPoly(a.field_, std::move(out));
  }
  FieldPoly& operator*=(const FieldPoly& b) { return *this = *this * b; }

  FieldPoly scaled(const FFElement& c) const {
    FieldPoly r = *this;
    for (auto& x : r.coeffs_) x = field_->mul(x, c);
    r.trim();
    return r;
  }
  FieldPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(coeffs_.back()));
  }
  /// Multiply by x^k.
  FieldPoly shifted(unsigned k) const {
    if (is_zero()) return *this;
    FieldPoly r = *this;
    r.coeffs_.insert(r.coeffs_.begin(), k, field_->zero());
    return r;
  }
  FieldPoly derivative() const {
    FieldPoly r(field_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_.push_back(field_->scale(coeffs_[i], i));
    r.trim();
    return r;
  }
  FFElement eval(const FFElement& a) const {
    FFElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), coeffs_[i]);
    return acc;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ field_->characteristic();
    for (const auto& c : coeffs_)
      for (auto v : c.coords()) h = (h ^ v) * 0x100000001b3ULL;
    return h ^ static_cast<std::uint64_t>(coeffs_.size());
  }

  /// Readable form in the variable `var`, e.g. "T^2 + 2*T + 1".
  std::string to_string(const std::string& var = "T") const {
    if (is_zero()) return "0";
    std::string out;
    const FiniteField& F = *field_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const FFElement& c = coeffs_[i];
      if (F.is_zero(c)) continue;
      std::string cs = F.to_string(c);
      bool compound = cs.find(' ') != std::string::npos;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        out += compound ? "(" + cs + ")" : cs;
      } else if (F.is_one(c)) {
        out += mono;
      } else {
        out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  friend std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);

  FieldPtr field_;
  std::vector<FFElement> coeffs_;
};

inline std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  a.same_field(b);
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  const FieldPtr& fp = b.field_ptr();
  const FiniteField& F = *fp;
  if (a.degree() < b.degree()) return {FieldPoly(fp), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t qn = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> r(a.coeffs().size()), bv(db + 1), q(qn, 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs()[i][0];
    for (std::size_t i = 0; i <= db; ++i) bv[i] = b.coeffs()[i][0];
    const std::uint64_t linv = detail::invmod_u64(bv[db], p);
    for (std::size_t k = qn; k-- > 0;) {
      std::uint64_t c = detail::mulmod_u64(r[k + db], linv, p);
      q[k] = c;
      if (!c) continue;
      for (std::size_t j = 0; j <= db; ++j) {
        std::uint64_t t = detail::mulmod_u64(c, bv[j], p);
        r[k + j] = r[k + j] >= t ? r[k + j] - t : r[k + j] + p - t;
      }
    }
    std::vector<FFElement> qe, re;
    qe.reserve(qn);
    for (auto v : q) qe.emplace_back(FFElement::storage_type{v});
    re.reserve(db);
    for (std::size_t i = 0; i < db; ++i) re.emplace_back(FFElement::storage_type{r[i]});
    return {FieldPoly(fp, std::move(qe)), FieldPoly(fp, std::move(re))};
  }
  std::vector<FFElement> r = a.coeffs(), q(qn, F.zero());
  const FFElement linv = F.inv(b.lead());
  for (std::size_t k = qn; k-- > 0;) {
    FFElement c = F.mul(r[k + db], linv);
    q[k] = c;
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b.coeffs()[j]));
  }
  r.resize(db);
  return {FieldPoly(fp, std::move(q)), FieldPoly(fp, std::move(r))};
}

inline FieldPoly operator/(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).first; }
inline FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).second; }

/// Degree first, then coefficients compared from the top (base-q numeral order).
inline bool canonical_less(const FieldPoly& a, const FieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != b.coeffs()[i]) return canonical_less(a.coeffs()[i], b.coeffs()[i]);
  }
  return false;
}

/// Monic greatest common divisor.
inline FieldPoly gcd(FieldPoly a, FieldPoly b) {
  a.same_field(b);
  if (a.is_zero() && b.is_zero()) throw error(errc::both_zero, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    FieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<FieldPoly, FieldPoly, FieldPoly> xgcd(const FieldPoly& a, const FieldPoly& b) {
  a.same_field(b);
  if (a.is_zero() && b.is_zero()) throw error(errc::both_zero, "xgcd(0, 0) is undefined");
  const FieldPtr& fp = a.field_ptr() ? a.field_ptr() : b.field_ptr();
  FieldPoly r0 = a, r1 = b, s0 = FieldPoly::one(fp), s1(fp), t0(fp), t1 = FieldPoly::one(fp);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FieldPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FieldPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FFElement li = fp->inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

inline FieldPoly powmod(const FieldPoly& base, const BigInt& exp, const FieldPoly& mod) {
  if (exp < 0) throw error(errc::unsupported, "negative exponent");
  FieldPoly result = FieldPoly::one(mod.field_ptr()) % mod;
  FieldPoly b = base % mod;
  const unsigned bits = exp == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(exp)) + 1;
  for (unsigned i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(exp, i)) result = (result * b) % mod;
    if (i + 1 < bits) b = (b * b) % mod;
  }
  return result;
}

inline FieldPoly pow(const FieldPoly& base, unsigned exp) {
  FieldPoly result = FieldPoly::one(base.field_ptr());
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

namespace detail {

inline std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// Rabin's test: x^{q^n} = x mod f and gcd(x^{q^{n/r}} - x, f) = 1 for primes r | n.
inline bool is_irreducible(const FieldPoly& f) {
  if (f.degree() < 1) throw error(errc::constant_input, "irreducibility of a constant");
  const auto n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  FieldPoly g = f.monic();
  const FieldPoly x = FieldPoly::x(f.field_ptr());
  const BigInt& q = f.field().size();
  std::vector<FieldPoly> frob(n + 1, FieldPoly(f.field_ptr()));
  frob[0] = x;
  for (unsigned k = 1; k <= n; ++k) frob[k] = powmod(frob[k - 1], q, g);
  if (!(frob[n] == x % g)) return false;
  for (unsigned r : detail::prime_divisors(n)) {
    if (!gcd(frob[n / r] - x, g).is_one()) return false;
  }
  return true;
}

/// Square-free decomposition of a monic polynomial: pairs (factor, multiplicity).
inline std::vector<std::pair<FieldPoly, unsigned>> squarefree_factorization(const FieldPoly& f) {
  std::vector<std::pair<FieldPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const FiniteField& F = f.field();
  const auto p = static_cast<unsigned>(std::min<std::uint64_t>(F.characteristic(), 1U << 30));
  FieldPoly fm = f.monic();
  FieldPoly c = gcd(fm, fm.derivative());
  FieldPoly w = fm / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FieldPoly y = gcd(w, c);
    FieldPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    // c = h(x^p); take the p-th root coefficient-wise
    std::vector<FFElement> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(F.pth_root(c.coeffs()[k]));
    FieldPoly r(f.field_ptr(), std::move(root));
    for (auto& [g, e] : squarefree_factorization(r)) out.emplace_back(g, e * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : canonical_less(a.first, b.first);
  });
  return out;
}

/// For square-free monic f: pairs (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<FieldPoly, unsigned>> distinct_degree_factorization(const FieldPoly& f) {
  std::vector<std::pair<FieldPoly, unsigned>> out;
  FieldPoly rest = f.monic();
  const FieldPoly x = FieldPoly::x(f.field_ptr());
  FieldPoly h = x % rest;
  const BigInt& q = f.field().size();
  for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
    h = powmod(h, q, rest);
    FieldPoly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

/// Cantor-Zassenhaus splitting of a monic product of distinct irreducibles of degree d.
/// The PRNG is seeded from f so the result is reproducible.
inline std::vector<FieldPoly> equal_degree_factorization(const FieldPoly& f, unsigned d) {
  const FieldPtr& fp = f.field_ptr();
  const FiniteField& F = *fp;
  if (f.degree() <= static_cast<int>(d)) return {f.monic()};
  const auto r = static_cast<std::size_t>(f.degree()) / d;
  std::mt19937_64 rng(f.hash());
  std::vector<FieldPoly> parts{f.monic()};
  const bool odd = F.characteristic() != 2;
  const BigInt qd = isect::pow(F.size(), d);
  const BigInt half = (qd - 1) / 2;
  const unsigned trace_terms = F.degree() * d;
  while (parts.size() < r) {
    std::vector<FFElement> rc;
    for (int i = 0; i < f.degree(); ++i) rc.push_back(F.random(rng));
    FieldPoly h(fp, std::move(rc));
    if (h.degree() < 1) continue;
    std::vector<FieldPoly> next;
    // The splitting polynomial is reduced modulo f; it works modulo each part.
    FieldPoly g(fp);
    if (odd) {
      g = powmod(h, half, f) - FieldPoly::one(fp);
    } else {
      FieldPoly t = h % f, acc = h % f;
      for (unsigned i = 1; i < trace_terms; ++i) {
        t = (t * t) % f;
        acc += t;
      }
      g = acc;
    }
    for (auto& u : parts) {
      if (u.degree() == static_cast<int>(d) || g.is_zero()) {
        next.push_back(u);
        continue;
      }
      FieldPoly s = gcd(u, g % u);
      if (s.degree() > 0 && s.degree() < u.degree()) {
        next.push_back(s);
        next.push_back(u / s);
      } else {
        next.push_back(u);
      }
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end(), [](const FieldPoly& a, const FieldPoly& b) { return canonical_less(a, b); });
  return parts;
}

struct FieldFactorization {
  FFElement unit;
  std::vector<std::pair<FieldPoly, unsigned>> factors;  // monic irreducible, canonical order
};

/// Complete factorization: square-free split, distinct-degree, equal-degree.
inline FieldFactorization factor(const FieldPoly& f) {
  if (f.is_zero()) throw error(errc::zero_input, "cannot factor the zero polynomial");
  FieldFactorization out{f.lead(), {}};
  for (const auto& [sf, mult] : squarefree_factorization(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(sf)) {
      for (auto& g : equal_degree_factorization(block, d)) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

/// All roots in the coefficient field, via gcd(f, x^Q - x) and equal-degree splitting.
inline std::vector<FFElement> roots(const FieldPoly& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "every element is a root of 0");
  if (f.degree() < 1) return {};
  const FieldPtr& fp = f.field_ptr();
  FieldPoly fm = f.monic();
  const FieldPoly x = FieldPoly::x(fp);
  FieldPoly g = gcd(fm, powmod(x, fp->size(), fm) - x);
  std::vector<FFElement> out;
  if (g.degree() < 1) return out;
  for (const auto& lin : equal_degree_factorization(g, 1)) out.push_back(fp->neg(lin.coeffs()[0]));
  std::sort(out.begin(), out.end(), [](const FFElement& a, const FFElement& b) { return canonical_less(a, b); });
  return out;
}

inline bool has_root(const FieldPoly& f) {
  if (f.is_zero()) return true;
  if (f.degree() < 1) return false;
  FieldPoly fm = f.monic();
  const FieldPoly x = FieldPoly::x(f.field_ptr());
  return gcd(fm, powmod(x, f.field().size(), fm) - x).degree() >= 1;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-q digits of index.
inline FieldPoly monic_from_index(const FieldPtr& field, unsigned deg, std::uint64_t index) {
  const std::uint64_t q = to_u64(field->size());
  std::vector<FFElement> c;
  c.reserve(deg + 1);
  for (unsigned i = 0; i < deg; ++i) {
    c.push_back(field->element_from_index(index % q));
    index /= q;
  }
  c.push_back(field->one());
  return FieldPoly(field, std::move(c));
}

/// Polynomial of degree < deg whose coefficients are the base-q digits of index.
inline FieldPoly poly_from_index(const FieldPtr& field, unsigned deg, std::uint64_t index) {
  const std::uint64_t q = to_u64(field->size());
  std::vector<FFElement> c;
  c.reserve(deg);
  for (unsigned i = 0; i < deg; ++i) {
    c.push_back(field->element_from_index(index % q));
    index /= q;
  }
  return FieldPoly(field, std::move(c));
}

inline std::uint64_t checked_count(const BigInt& q, unsigned n) {
  BigInt total = isect::pow(q, n);
  if (total > (BigInt(1) << 40)) throw error(errc::cap_exceeded, "enumeration of " + total.str() + " polynomials");
  return to_u64(total);
}

/// Visits every monic irreducible of degree 1..n_max in canonical order (degree, then
/// coefficients from the top). The visitor returns false to stop early.
template <class Visitor>
void for_each_monic_irreducible(const FieldPtr& field, unsigned n_max, Visitor&& visit) {
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::uint64_t count = checked_count(field->size(), n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FieldPoly g = monic_from_index(field, n, idx);
      if (n > 1 && (field->is_zero(g.coeffs()[0]) || !is_irreducible(g))) continue;
      if (!visit(g)) return;
    }
  }
}

inline std::vector<FieldPoly> monic_irreducibles(const FieldPtr& field, unsigned n_max) {
  std::vector<FieldPoly> out;
  for_each_monic_irreducible(field, n_max, [&](const FieldPoly& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

/// F_{p^e} over a caller-supplied modulus (validated irreducible).
inline FieldPtr make_extension_field(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  auto prime = std::make_shared<const FiniteField>(FiniteField::prime_field(p));
  if (modulus.size() < 2) return prime;
  std::vector<long long> c(modulus.begin(), modulus.end());
  FieldPoly m = FieldPoly::from_ints(prime, c);
  if (!m.is_monic() || m.degree() + 1 != static_cast<int>(modulus.size()))
    throw error(errc::unsupported, "modulus must be monic");
  if (!is_irreducible(m)) throw error(errc::not_prime, "modulus is reducible over F_p");
  std::vector<std::uint64_t> mc;
  for (const auto& x : m.coeffs()) mc.push_back(x[0]);
  return std::make_shared<const FiniteField>(FiniteFieldSpec{p, static_cast<unsigned>(m.degree()), mc});
}

/// F_{p^e} over the lexicographically least monic irreducible of degree e. Cached.
inline FieldPtr make_extension_field(std::uint64_t p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }
  auto prime = std::make_shared<const FiniteField>(FiniteField::prime_field(p));
  FieldPtr result = prime;
  if (e > 1) {
    const std::uint64_t count = checked_count(BigInt(p), e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FieldPoly g = monic_from_index(prime, e, idx);
      if (prime->is_zero(g.coeffs()[0]) || !is_irreducible(g)) continue;
      std::vector<std::uint64_t> mc;
      for (const auto& x : g.coeffs()) mc.push_back(x[0]);
      result = std::make_shared<const FiniteField>(FiniteFieldSpec{p, e, mc});
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(p, e), result);
  return result;
}

/// Field of size q (q a prime power).
inline FieldPtr make_field(const BigInt& q) {
  if (q < 2) throw error(errc::not_prime, "field size must be a prime power");
  auto fac = factor_integer(q);
  if (fac.size() != 1) throw error(errc::not_prime, q.str() + " is not a prime power");
  if (fac[0].first >= (BigInt(1) << 62)) throw error(errc::unsupported, "characteristic too large");
  return make_extension_field(to_u64(fac[0].first), fac[0].second);
}

}  // namespace isect
