#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "field_poly.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

/// Outcome of an exhaustive search over all residues modulo `modulus`.
template <class Ring>
struct OracleReport {
  typename Ring::element_type modulus;
  std::uint64_t residues_tried = 0;
  std::optional<typename Ring::element_type> root;
  std::uint64_t work = 0;  // coefficient operations, roughly
};

inline constexpr std::uint64_t default_oracle_cap = 1'000'000;

namespace detail {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

// Residues of F_p[T] modulo a monic m of degree D, as coefficient arrays.
class PrimeResidueRing {
 public:
  PrimeResidueRing(std::uint64_t p, std::vector<std::uint64_t> monic) : p_(p), m_(std::move(monic)), d_(m_.size() - 1) {}

  std::size_t degree() const { return d_; }

  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> a) const {
    for (std::size_t k = a.size(); k-- > d_;) {
      const std::uint64_t c = a[k];
      if (!c) continue;
      for (std::size_t j = 0; j < d_; ++j)
        a[k - d_ + j] = (a[k - d_ + j] + p_ - mulmod_u64(c, m_[j], p_)) % p_;
      a[k] = 0;
    }
    a.resize(d_);
    return a;
  }

  void mul_into(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                std::vector<std::uint64_t>& out) const {
    std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
    for (std::size_t i = 0; i < d_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < d_; ++j) prod[i + j] = addmod(prod[i + j], mulmod_u64(a[i], b[j], p_), p_);
    }
    out = reduce(std::move(prod));
  }

  std::uint64_t p() const { return p_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> m_;
  std::size_t d_;
};

}  // namespace detail

/// Tries every residue class modulo m, in canonical order (0..|m|-1, or polynomials of
/// degree < deg m by index with the top coefficient most significant).
template <class Ring>
OracleReport<Ring> oracle_has_root_mod(const UPoly<Ring>& f, const typename Ring::element_type& m,
                                       std::uint64_t cap = default_oracle_cap) {
  const Ring& R = f.ring();
  if (R.is_zero(m)) throw error(errc::division_by_zero, "modulus must be non-zero");
  OracleReport<Ring> rep{R.normal_part(m), 0, std::nullopt, 0};
  const BigInt count = R.residue_count(m);
  if (count > cap) throw error(errc::cap_exceeded, count.str() + " residues exceed the oracle cap");
  const std::uint64_t n = to_u64(count);
  if constexpr (Ring::is_function_field) {
    const FieldPtr& F = R.field();
    const FieldPoly mm = m.monic();
    const auto D = static_cast<std::size_t>(mm.degree());
    if (D == 0) {
      rep.residues_tried = 1;
      rep.root = R.zero();
      return rep;
    }
    if (F->is_prime_field()) {
      const std::uint64_t p = F->characteristic();
      std::vector<std::uint64_t> mc;
      for (const auto& c : mm.coeffs()) mc.push_back(c[0]);
      detail::PrimeResidueRing ring(p, mc);
      std::vector<std::vector<std::uint64_t>> coeffs;
      for (const auto& c : f.coeffs()) {
        std::vector<std::uint64_t> v;
        for (const auto& x : c.coeffs()) v.push_back(x[0]);
        if (v.size() < D) v.resize(D, 0);
        coeffs.push_back(ring.reduce(std::move(v)));
      }
      std::vector<std::uint64_t> r(D, 0), acc(D), tmp;
      for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < D; ++i) {
          r[i] = t % p;
          t /= p;
        }
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t i = coeffs.size(); i-- > 0;) {
          ring.mul_into(acc, r, tmp);
          for (std::size_t j = 0; j < D; ++j) acc[j] = detail::addmod(tmp[j], coeffs[i][j], p);
        }
        rep.work += coeffs.size() * D * D;
        ++rep.residues_tried;
        if (std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; })) {
          rep.root = poly_from_index(F, static_cast<unsigned>(D), idx);
          return rep;
        }
      }
      return rep;
    }
    std::vector<FieldPoly> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(c % mm);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      FieldPoly r = poly_from_index(F, static_cast<unsigned>(D), idx);
      FieldPoly acc(F);
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * r + coeffs[i]) % mm;
      rep.work += coeffs.size() * D * D;
      ++rep.residues_tried;
      if (acc.is_zero()) {
        rep.root = r;
        return rep;
      }
    }
    return rep;
  } else {
    const BigInt am = isect::abs(m);
    if (am < (BigInt(1) << 62)) {
      const std::uint64_t mu = to_u64(am);
      std::vector<std::uint64_t> coeffs;
      for (const auto& c : f.coeffs()) coeffs.push_back(to_u64(mod_floor(c, am)));
      for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = detail::addmod(detail::mulmod_u64(acc, x, mu), coeffs[i], mu);
        rep.work += coeffs.size();
        ++rep.residues_tried;
        if (acc == 0) {
          rep.root = BigInt(x);
          return rep;
        }
      }
      return rep;
    }
    for (std::uint64_t x = 0; x < n; ++x) {
      ++rep.residues_tried;
      if (mod_floor(f.eval(BigInt(x)), am) == 0) {
        rep.root = BigInt(x);
        return rep;
      }
    }
    return rep;
  }
}

/// First modulus without a root: integers 2..bound, or monic moduli of degree 1..bound in
/// canonical order.
template <class Ring>
std::optional<typename Ring::element_type> oracle_scan(const UPoly<Ring>& f, std::uint64_t bound,
                                                       std::uint64_t cap = default_oracle_cap) {
  const Ring& R = f.ring();
  if constexpr (Ring::is_function_field) {
    for (unsigned n = 1; n <= bound; ++n) {
      const std::uint64_t count = checked_count(R.q(), n);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        FieldPoly m = monic_from_index(R.field(), n, idx);
        if (!oracle_has_root_mod(f, m, cap).root) return m;
      }
    }
  } else {
    for (std::uint64_t m = 2; m <= bound; ++m)
      if (!oracle_has_root_mod(f, BigInt(m), cap).root) return BigInt(m);
  }
  return std::nullopt;
}

}  // namespace isect
