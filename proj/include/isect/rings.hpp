#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "field_poly.hpp"
#include "finite_field.hpp"

namespace isect {

/// A prime of the coefficient ring: a positive prime integer, or a monic irreducible in F_q[T].
/// `norm` is the size of the residue field.
template <class Element>
struct Prime {
  Element value;
  unsigned degree = 1;
  BigInt norm;

  bool operator==(const Prime& o) const { return value == o.value; }
};

template <class Element>
struct ElementFactorization {
  Element unit;
  std::vector<std::pair<Prime<Element>, unsigned>> factors;
};

template <class Ring>
using PrimeElement = Prime<typename Ring::element_type>;
template <class Ring>
using Factorization = ElementFactorization<typename Ring::element_type>;

namespace detail {

// Dense matrices over F_p, row-major; used to present F_q[T]/(P) over a single modulus.
using MatrixFp = std::vector<std::vector<std::uint64_t>>;

inline std::vector<std::uint64_t> mat_vec(const MatrixFp& m, const std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::vector<std::uint64_t> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + static_cast<unsigned __int128>(m[i][j]) * v[j]) % p;
    out[i] = static_cast<std::uint64_t>(acc);
  }
  return out;
}

inline MatrixFp mat_inverse(MatrixFp a, std::uint64_t p) {
  const std::size_t n = a.size();
  MatrixFp inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw error(errc::unsupported, "singular basis matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    std::uint64_t s = invmod_u64(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = mulmod_u64(a[col][j], s, p);
      inv[col][j] = mulmod_u64(inv[col][j], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      std::uint64_t f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = (a[r][j] + p - mulmod_u64(f, a[col][j], p)) % p;
        inv[r][j] = (inv[r][j] + p - mulmod_u64(f, inv[col][j], p)) % p;
      }
    }
  }
  return inv;
}

}  // namespace detail

class IntegerRing;
class FqTRing;

/// Z/(p) with reduction and canonical lifting to [0, p).
class IntegerResidueField {
 public:
  explicit IntegerResidueField(Prime<BigInt> prime);

  const FieldPtr& field() const noexcept { return field_; }
  const Prime<BigInt>& prime() const noexcept { return *prime_; }

  FFElement reduce(const BigInt& a) const { return field_->from_bigint(a); }
  BigInt lift(const FFElement& a) const { return BigInt(a[0]); }

 private:
  std::shared_ptr<const Prime<BigInt>> prime_;
  FieldPtr field_;
};

/// F_q[T]/(P), presented as F_p[u]/(M) with deg M = e * deg P.
class FqTResidueField {
 public:
  FqTResidueField(Prime<FieldPoly> prime, FieldPtr base);

  const FieldPtr& field() const noexcept { return field_; }
  const Prime<FieldPoly>& prime() const noexcept { return *prime_; }

  FFElement reduce(const FieldPoly& a) const;
  /// Canonical representative of degree < deg P.
  FieldPoly lift(const FFElement& a) const;

 private:
  std::shared_ptr<const Prime<FieldPoly>> prime_;
  FieldPtr base_;
  FieldPtr field_;
  bool flattened_ = false;
  detail::MatrixFp to_field_;
  detail::MatrixFp from_field_;
};

class IntegerRing {
 public:
  using element_type = BigInt;
  using residue_field_type = IntegerResidueField;
  static constexpr bool is_function_field = false;

  bool operator==(const IntegerRing&) const { return true; }

  std::string name() const { return "Z"; }
  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt from_int(long long v) const { return v; }
  BigInt from_bigint(const BigInt& v) const { return v; }
  bool is_zero(const BigInt& a) const { return a == 0; }
  bool is_unit(const BigInt& a) const { return a == 1 || a == -1; }
  std::uint64_t characteristic() const { return 0; }
  void check(const BigInt&) const {}

  /// a = unit * normal with normal >= 0.
  std::pair<BigInt, BigInt> split_unit(const BigInt& a) const {
    if (a < 0) return {-1, -a};
    return {1, a};
  }
  BigInt normal_part(const BigInt& a) const { return isect::abs(a); }
  BigInt unit_part(const BigInt& a) const { return a < 0 ? BigInt(-1) : BigInt(1); }
  BigInt unit_inverse(const BigInt& u) const { return u; }

  BigInt gcd(const BigInt& a, const BigInt& b) const { return isect::gcd(a, b); }
  std::optional<BigInt> divide(const BigInt& a, const BigInt& b) const {
    if (b == 0) throw error(errc::division_by_zero, "integer division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) return std::nullopt;
    return q;
  }
  BigInt divide_exact(const BigInt& a, const BigInt& b) const { return a / b; }
  BigInt reduce(const BigInt& a, const BigInt& m) const { return mod_floor(a, m); }
  BigInt reduce_symmetric(const BigInt& a, const BigInt& m) const { return mod_symmetric(a, m); }
  bool divides(const BigInt& d, const BigInt& a) const { return mod_floor(a, d) == 0; }
  BigInt inv_mod(const BigInt& a, const BigInt& m) const { return isect::inv_mod(a, m); }
  std::tuple<BigInt, BigInt, BigInt> xgcd(const BigInt& a, const BigInt& b) const { return isect::xgcd(a, b); }
  BigInt pow(const BigInt& a, unsigned e) const { return isect::pow(a, e); }

  Prime<BigInt> make_prime(const BigInt& v) const {
    BigInt a = isect::abs(v);
    if (!is_prime(a)) throw error(errc::not_prime, v.str() + " is not prime");
    return Prime<BigInt>{a, 1, a};
  }

  ElementFactorization<BigInt> factorize(const BigInt& a) const {
    if (a == 0) throw error(errc::zero_input, "cannot factor zero");
    ElementFactorization<BigInt> out{unit_part(a), {}};
    for (auto& [p, e] : factor_integer(a)) out.factors.emplace_back(Prime<BigInt>{p, 1, p}, e);
    return out;
  }

  IntegerResidueField residue_field(const Prime<BigInt>& p) const { return IntegerResidueField(p); }

  BigInt residue_count(const BigInt& m) const { return isect::abs(m); }
  BigInt residue_at(const BigInt& /*m*/, std::uint64_t index) const { return BigInt(index); }

  bool less(const BigInt& a, const BigInt& b) const { return a < b; }
  std::string to_string(const BigInt& a) const { return a.str(); }
};

class FqTRing {
 public:
  using element_type = FieldPoly;
  using residue_field_type = FqTResidueField;
  static constexpr bool is_function_field = true;

  explicit FqTRing(FieldPtr field) : field_(std::move(field)) {}

  bool operator==(const FqTRing& o) const { return field_ == o.field_ || *field_ == *o.field_; }

  const FieldPtr& field() const noexcept { return field_; }
  const BigInt& q() const { return field_->size(); }
  std::string name() const { return "F_" + field_->size().str() + "[T]"; }

  FieldPoly zero() const { return FieldPoly(field_); }
  FieldPoly one() const { return FieldPoly::one(field_); }
  FieldPoly from_int(long long v) const { return FieldPoly::constant(field_, field_->from_int(v)); }
  FieldPoly from_bigint(const BigInt& v) const { return FieldPoly::constant(field_, field_->from_bigint(v)); }
  FieldPoly constant(const FFElement& c) const { return FieldPoly::constant(field_, c); }
  FieldPoly T() const { return FieldPoly::x(field_); }
  bool is_zero(const FieldPoly& a) const { return a.is_zero(); }
  bool is_unit(const FieldPoly& a) const { return a.degree() == 0; }
  std::uint64_t characteristic() const { return field_->characteristic(); }
  void check(const FieldPoly& a) const {
    if (a.field_ptr() && !(a.field() == *field_)) throw error(errc::ring_mismatch, "element of a different F_q[T]");
  }

  std::pair<FieldPoly, FieldPoly> split_unit(const FieldPoly& a) const {
    if (a.is_zero()) return {one(), a};
    return {constant(a.lead()), a.monic()};
  }
  FieldPoly normal_part(const FieldPoly& a) const { return a.monic(); }
  FieldPoly unit_part(const FieldPoly& a) const { return a.is_zero() ? one() : constant(a.lead()); }
  FieldPoly unit_inverse(const FieldPoly& u) const { return constant(field_->inv(u.lead())); }

  /// Monic gcd; gcd(0, 0) = 0.
  FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) const {
    if (a.is_zero() && b.is_zero()) return zero();
    return isect::gcd(a.field_ptr() ? a : zero(), b.field_ptr() ? b : zero());
  }
  std::optional<FieldPoly> divide(const FieldPoly& a, const FieldPoly& b) const {
    auto [q, r] = divmod(a.field_ptr() ? a : zero(), b);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }
  FieldPoly divide_exact(const FieldPoly& a, const FieldPoly& b) const { return divmod(a, b).first; }
  FieldPoly reduce(const FieldPoly& a, const FieldPoly& m) const { return a.field_ptr() ? a % m : zero(); }
  FieldPoly reduce_symmetric(const FieldPoly& a, const FieldPoly& m) const { return reduce(a, m); }
  bool divides(const FieldPoly& d, const FieldPoly& a) const { return reduce(a, d).is_zero(); }
  FieldPoly inv_mod(const FieldPoly& a, const FieldPoly& m) const {
    auto [g, s, t] = isect::xgcd(a % m, m);
    if (!g.is_one()) throw error(errc::division_by_zero, "element not invertible modulo " + m.to_string());
    return s % m;
  }
  std::tuple<FieldPoly, FieldPoly, FieldPoly> xgcd(const FieldPoly& a, const FieldPoly& b) const {
    return isect::xgcd(a, b);
  }
  FieldPoly pow(const FieldPoly& a, unsigned e) const { return isect::pow(a, e); }

  Prime<FieldPoly> make_prime(const FieldPoly& v) const {
    check(v);
    if (v.degree() < 1 || !is_irreducible(v))
      throw error(errc::not_prime, v.to_string() + " is not irreducible");
    FieldPoly m = v.monic();
    auto deg = static_cast<unsigned>(m.degree());
    return Prime<FieldPoly>{std::move(m), deg, isect::pow(q(), deg)};
  }

  ElementFactorization<FieldPoly> factorize(const FieldPoly& a) const {
    if (a.is_zero()) throw error(errc::zero_input, "cannot factor zero");
    check(a);
    auto ff = isect::factor(a);
    ElementFactorization<FieldPoly> out{constant(ff.unit), {}};
    for (auto& [g, e] : ff.factors) {
      auto deg = static_cast<unsigned>(g.degree());
      out.factors.emplace_back(Prime<FieldPoly>{g, deg, isect::pow(q(), deg)}, e);
    }
    return out;
  }

  FqTResidueField residue_field(const Prime<FieldPoly>& p) const { return FqTResidueField(p, field_); }

  BigInt residue_count(const FieldPoly& m) const { return isect::pow(q(), static_cast<unsigned>(m.degree())); }
  FieldPoly residue_at(const FieldPoly& m, std::uint64_t index) const {
    return poly_from_index(field_, static_cast<unsigned>(m.degree()), index);
  }

  /// p-th root when every exponent of T is divisible by p (the p-th powers of F_q[T]).
  std::optional<FieldPoly> pth_root(const FieldPoly& a) const {
    const std::uint64_t p = characteristic();
    std::vector<FFElement> c;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (i % p != 0) {
        if (!field_->is_zero(a.coeffs()[i])) return std::nullopt;
        continue;
      }
      c.push_back(field_->pth_root(a.coeffs()[i]));
    }
    return FieldPoly(field_, std::move(c));
  }

  bool less(const FieldPoly& a, const FieldPoly& b) const { return canonical_less(a, b); }
  std::string to_string(const FieldPoly& a) const { return a.field_ptr() ? a.to_string("T") : "0"; }

 private:
  FieldPtr field_;
};

inline IntegerResidueField::IntegerResidueField(Prime<BigInt> prime)
    : prime_(std::make_shared<const Prime<BigInt>>(std::move(prime))) {
  if (prime_->value >= (BigInt(1) << 62))
    throw error(errc::unsupported, "residue fields need primes below 2^62");
  field_ = std::make_shared<const FiniteField>(FiniteField::prime_field(to_u64(prime_->value)));
}

inline FqTResidueField::FqTResidueField(Prime<FieldPoly> prime, FieldPtr base)
    : prime_(std::make_shared<const Prime<FieldPoly>>(std::move(prime))), base_(std::move(base)) {
  const FieldPoly& P = prime_->value;
  const unsigned n = prime_->degree;
  const std::uint64_t p = base_->characteristic();
  if (base_->is_prime_field()) {
    if (n == 1) {
      field_ = base_;
    } else {
      std::vector<std::uint64_t> mc;
      for (const auto& c : P.coeffs()) mc.push_back(c[0]);
      field_ = std::make_shared<const FiniteField>(FiniteFieldSpec{p, n, mc});
    }
    return;
  }
  // F_q = F_p[w]/(m(w)). Pick the least root omega of m and tau of P^omega in F_{p^{en}};
  // a(T) = sum a_ij w^j T^i maps to sum a_ij omega^j tau^i.
  flattened_ = true;
  const unsigned e = base_->degree();
  const unsigned N = e * n;
  field_ = make_extension_field(p, N);
  const FiniteField& L = *field_;
  std::vector<FFElement> mcoef;
  for (auto c : base_->spec().modulus) mcoef.push_back(L.from_int(static_cast<long long>(c)));
  FieldPoly m_L(field_, mcoef);
  FFElement omega = roots(m_L).at(0);
  std::vector<FFElement> omega_pow(e, L.one());
  for (unsigned j = 1; j < e; ++j) omega_pow[j] = L.mul(omega_pow[j - 1], omega);
  auto embed = [&](const FFElement& c) {
    FFElement acc = L.zero();
    for (unsigned j = 0; j < e; ++j) acc = L.add(acc, L.scale(omega_pow[j], c[j]));
    return acc;
  };
  std::vector<FFElement> pcoef;
  for (const auto& c : P.coeffs()) pcoef.push_back(embed(c));
  FFElement tau = roots(FieldPoly(field_, pcoef)).at(0);
  to_field_.assign(N, std::vector<std::uint64_t>(N, 0));
  FFElement tau_pow = L.one();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < e; ++j) {
      FFElement img = L.mul(omega_pow[j], tau_pow);
      for (unsigned r = 0; r < N; ++r) to_field_[r][i * e + j] = img[r];
    }
    tau_pow = L.mul(tau_pow, tau);
  }
  from_field_ = detail::mat_inverse(to_field_, p);
}

inline FFElement FqTResidueField::reduce(const FieldPoly& a) const {
  const unsigned n = prime_->degree;
  FieldPoly r = a.field_ptr() ? a % prime_->value : FieldPoly(base_);
  if (!flattened_) {
    if (n == 1) return r.coeff(0);
    std::vector<std::uint64_t> c(n, 0);
    for (unsigned i = 0; i < n; ++i) c[i] = r.coeff(i)[0];
    return field_->from_coords(std::move(c));
  }
  const unsigned e = base_->degree();
  std::vector<std::uint64_t> v(e * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    FFElement c = r.coeff(i);
    for (unsigned j = 0; j < e; ++j) v[i * e + j] = c[j];
  }
  return field_->from_coords(detail::mat_vec(to_field_, v, base_->characteristic()));
}

inline FieldPoly FqTResidueField::lift(const FFElement& a) const {
  const unsigned n = prime_->degree;
  if (!flattened_) {
    if (n == 1) return FieldPoly::constant(base_, a);
    std::vector<FFElement> c;
    for (unsigned i = 0; i < n; ++i) c.push_back(base_->from_coords({a[i]}));
    return FieldPoly(base_, std::move(c));
  }
  const unsigned e = base_->degree();
  std::vector<std::uint64_t> v(a.coords().begin(), a.coords().end());
  auto w = detail::mat_vec(from_field_, v, base_->characteristic());
  std::vector<FFElement> c;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint64_t> cc(w.begin() + i * e, w.begin() + (i + 1) * e);
    c.push_back(base_->from_coords(std::move(cc)));
  }
  return FieldPoly(base_, std::move(c));
}

}  // namespace isect
