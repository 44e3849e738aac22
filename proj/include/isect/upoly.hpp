#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field_poly.hpp"
#include "rings.hpp"

namespace isect {

/// Dense polynomial in x with coefficients in `Ring`, lowest degree first.
template <class Ring>
class UPoly {
 public:
  using ring_type = Ring;
  using coeff_type = typename Ring::element_type;

  explicit UPoly(Ring ring) : ring_(std::move(ring)) {}
  UPoly(Ring ring, std::vector<coeff_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) ring_.check(c);
    trim();
  }

  static UPoly constant(const Ring& ring, coeff_type c) { return UPoly(ring, {std::move(c)}); }
  static UPoly x(const Ring& ring) { return UPoly(ring, {ring.zero(), ring.one()}); }
  static UPoly monomial(const Ring& ring, coeff_type c, unsigned deg) {
    std::vector<coeff_type> v(deg + 1, ring.zero());
    v[deg] = std::move(c);
    return UPoly(ring, std::move(v));
  }
  /// a*x + b
  static UPoly linear(const Ring& ring, coeff_type a, coeff_type b) { return UPoly(ring, {std::move(b), std::move(a)}); }

  const Ring& ring() const noexcept { return ring_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<coeff_type>& coeffs() const noexcept { return coeffs_; }
  coeff_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  coeff_type lead() const { return coeffs_.empty() ? ring_.zero() : coeffs_.back(); }

  bool operator==(const UPoly& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }

  void same_ring(const UPoly& o) const {
    if (!(ring_ == o.ring_)) throw error(errc::ring_mismatch, "polynomials over different rings");
  }

  UPoly& operator+=(const UPoly& b) {
    same_ring(b);
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + b.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& b) {
    same_ring(b);
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - b.coeffs_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    a.same_ring(b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.ring_);
    std::vector<coeff_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.ring_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(a.ring_, std::move(out));
  }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  UPoly scaled(const coeff_type& c) const {
    UPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }
  /// Coefficient-wise exact division by a ring element.
  UPoly divided_by(const coeff_type& c) const {
    UPoly r = *this;
    for (auto& x : r.coeffs_) x = ring_.divide_exact(x, c);
    return r;
  }

  UPoly derivative() const {
    UPoly r(ring_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      r.coeffs_.push_back(coeffs_[i] * ring_.from_int(static_cast<long long>(i)));
    r.trim();
    return r;
  }

  coeff_type eval(const coeff_type& a) const {
    ring_.check(a);
    coeff_type acc = ring_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i];
    return acc;
  }

  /// f(a + b*x).
  UPoly compose_linear(const coeff_type& a, const coeff_type& b) const {
    UPoly lin = linear(ring_, b, a);
    UPoly acc(ring_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + constant(ring_, coeffs_[i]);
    return acc;
  }
  UPoly taylor_shift(const coeff_type& a) const { return compose_linear(a, ring_.one()); }

  /// g(x) with g(x^k) = f, or nullopt when some exponent is not a multiple of k.
  std::optional<UPoly> deflate(unsigned k) const {
    UPoly r(ring_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i % k == 0) {
        r.coeffs_.push_back(coeffs_[i]);
      } else if (!ring_.is_zero(coeffs_[i])) {
        return std::nullopt;
      }
    }
    r.trim();
    return r;
  }
  UPoly inflate(unsigned k) const {
    if (is_zero()) return *this;
    std::vector<coeff_type> v(static_cast<std::size_t>(degree()) * k + 1, ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return UPoly(ring_, std::move(v));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const coeff_type& c0 = coeffs_[i];
      if (ring_.is_zero(c0)) continue;
      bool negative = false;
      coeff_type c = c0;
      if constexpr (!Ring::is_function_field) {
        if (c < 0) {
          negative = true;
          c = -c;
        }
      }
      std::string cs = ring_.to_string(c);
      bool compound = cs.find(' ') != std::string::npos;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        out += compound ? "(" + cs + ")" : cs;
      } else if (c == ring_.one()) {
        out += mono;
      } else {
        out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Ring ring_;
  std::vector<coeff_type> coeffs_;
};

/// gcd of the coefficients, normalized (positive / monic); zero for f = 0.
template <class Ring>
typename Ring::element_type content(const UPoly<Ring>& f) {
  const Ring& R = f.ring();
  auto g = R.zero();
  for (const auto& c : f.coeffs()) {
    g = R.gcd(g, c);
    if (R.is_unit(g)) return R.one();
  }
  return g;
}

/// (content, primitive part) with primitive * content = f.
template <class Ring>
std::pair<typename Ring::element_type, UPoly<Ring>> normalize_primitive(const UPoly<Ring>& f) {
  if (f.is_zero()) throw error(errc::zero_polynomial, "zero polynomial has no primitive part");
  auto c = content(f);
  if (c == f.ring().one()) return {c, f};
  return {c, f.divided_by(c)};
}

template <class Ring>
UPoly<Ring> primitive_part(const UPoly<Ring>& f) {
  return normalize_primitive(f).second;
}

/// Primitive part scaled by a unit so the leading coefficient is normalized
/// (positive over Z, monic in T over F_q[T]).
template <class Ring>
UPoly<Ring> canonical_primitive(const UPoly<Ring>& f) {
  UPoly<Ring> g = primitive_part(f);
  const Ring& R = g.ring();
  auto u = R.unit_part(g.lead());
  if (u == R.one()) return g;
  return g.scaled(R.unit_inverse(u));
}

/// lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class Ring>
std::pair<UPoly<Ring>, UPoly<Ring>> pseudo_divmod(const UPoly<Ring>& a, const UPoly<Ring>& b) {
  a.same_ring(b);
  const Ring& R = a.ring();
  if (b.is_zero()) throw error(errc::division_by_zero, "pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly<Ring>(R), a};
  const auto lb = b.lead();
  const int db = b.degree();
  int e = a.degree() - db + 1;
  UPoly<Ring> q(R), r = a;
  while (!r.is_zero() && r.degree() >= db) {
    UPoly<Ring> t = UPoly<Ring>::monomial(R, r.lead(), static_cast<unsigned>(r.degree() - db));
    q = q.scaled(lb) + t;
    r = r.scaled(lb) - t * b;
    --e;
  }
  auto s = R.pow(lb, static_cast<unsigned>(e));
  return {q.scaled(s), r.scaled(s)};
}

template <class Ring>
UPoly<Ring> pseudo_remainder(const UPoly<Ring>& a, const UPoly<Ring>& b) {
  return pseudo_divmod(a, b).second;
}

/// a / b when b divides a in R[x].
template <class Ring>
std::optional<UPoly<Ring>> divide_exact(const UPoly<Ring>& a, const UPoly<Ring>& b) {
  a.same_ring(b);
  const Ring& R = a.ring();
  if (b.is_zero()) throw error(errc::division_by_zero, "division by zero polynomial");
  UPoly<Ring> r = a;
  std::vector<typename Ring::element_type> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, R.zero());
  const int db = b.degree();
  while (!r.is_zero()) {
    if (r.degree() < db) return std::nullopt;
    auto c = R.divide(r.lead(), b.lead());
    if (!c) return std::nullopt;
    auto k = static_cast<unsigned>(r.degree() - db);
    q[k] = *c;
    r -= UPoly<Ring>::monomial(R, *c, k) * b;
  }
  return UPoly<Ring>(R, std::move(q));
}

/// Resultant by the subresultant pseudo-remainder sequence.
template <class Ring>
typename Ring::element_type resultant(UPoly<Ring> A, UPoly<Ring> B) {
  A.same_ring(B);
  const Ring R = A.ring();
  using E = typename Ring::element_type;
  if (A.is_zero() || B.is_zero()) throw error(errc::zero_polynomial, "resultant with zero polynomial");
  E s = R.one();
  if (A.degree() < B.degree()) {
    if ((A.degree() * B.degree()) % 2 == 1) s = -s;
    std::swap(A, B);
  }
  if (B.degree() == 0) return s * R.pow(B.lead(), static_cast<unsigned>(A.degree()));
  auto [a, Ap] = normalize_primitive(A);
  auto [b, Bp] = normalize_primitive(B);
  A = std::move(Ap);
  B = std::move(Bp);
  E t = R.pow(a, static_cast<unsigned>(B.degree())) * R.pow(b, static_cast<unsigned>(A.degree()));
  E g = R.one(), h = R.one();
  for (;;) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    UPoly<Ring> Rm = pseudo_remainder(A, B);
    A = std::move(B);
    B = Rm.divided_by(g * R.pow(h, static_cast<unsigned>(delta)));
    g = A.lead();
    if (delta > 0) h = R.divide_exact(R.pow(g, static_cast<unsigned>(delta)), R.pow(h, static_cast<unsigned>(delta - 1)));
    if (B.is_zero()) return R.zero();
    if (B.degree() == 0) {
      const auto dA = static_cast<unsigned>(A.degree());
      h = R.divide_exact(R.pow(B.lead(), dA), R.pow(h, dA - 1));
      return s * t * h;
    }
  }
}

/// Resultant as the Sylvester determinant, by fraction-free (Bareiss) elimination.
template <class Ring>
typename Ring::element_type resultant_sylvester(const UPoly<Ring>& f, const UPoly<Ring>& g) {
  f.same_ring(g);
  const Ring& R = f.ring();
  using E = typename Ring::element_type;
  if (f.is_zero() || g.is_zero()) throw error(errc::zero_polynomial, "resultant with zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t N = m + n;
  if (N == 0) return R.one();
  std::vector<std::vector<E>> M(N, std::vector<E>(N, R.zero()));
  // Row i: x^(n-1-i) f for i < n, x^(m-1-(i-n)) g after; columns by descending power.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = f.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = g.coeff(n - k);
  E sign = R.one();
  E prev = R.one();
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (R.is_zero(M[k][k])) {
      std::size_t piv = k + 1;
      while (piv < N && R.is_zero(M[piv][k])) ++piv;
      if (piv == N) return R.zero();
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j)
        M[i][j] = R.divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = R.zero();
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
template <class Ring>
typename Ring::element_type discriminant(const UPoly<Ring>& f) {
  const Ring& R = f.ring();
  if (f.degree() < 1) throw error(errc::constant_input, "discriminant of a constant");
  UPoly<Ring> df = f.derivative();
  if (df.is_zero()) return R.zero();
  auto r = resultant(f, df);
  auto n = static_cast<long long>(f.degree());
  auto d = R.divide_exact(r, f.lead());
  return (n * (n - 1) / 2) % 2 ? -d : d;
}

namespace detail {

/// Image over a residue field; may be zero.
template <class Ring>
FieldPoly image(const UPoly<Ring>& f, const typename Ring::residue_field_type& rf) {
  std::vector<FFElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(rf.reduce(a));
  return FieldPoly(rf.field(), std::move(c));
}

}  // namespace detail

/// Coefficient-wise image over the residue field of `rf`. Throws NotPrimitive when the prime
/// divides every coefficient.
template <class Ring>
FieldPoly reduce_mod_prime(const UPoly<Ring>& f, const typename Ring::residue_field_type& rf) {
  FieldPoly r = detail::image<Ring>(f, rf);
  if (r.is_zero()) throw error(errc::not_primitive, "polynomial vanishes modulo the prime");
  return r;
}

template <class Ring>
FieldPoly reduce_mod_prime(const UPoly<Ring>& f, const PrimeElement<Ring>& p) {
  return reduce_mod_prime<Ring>(f, f.ring().residue_field(p));
}

/// Lift a residue-field polynomial coefficient-wise to canonical representatives.
template <class Ring>
UPoly<Ring> lift_poly(const Ring& R, const FieldPoly& g, const typename Ring::residue_field_type& rf) {
  std::vector<typename Ring::element_type> c;
  for (const auto& a : g.coeffs()) c.push_back(rf.lift(a));
  return UPoly<Ring>(R, std::move(c));
}

}  // namespace isect
