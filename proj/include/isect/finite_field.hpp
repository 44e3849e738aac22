#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bigint.hpp"
#include "error.hpp"

namespace isect {

/// Describes F_{p^e} = F_p[u]/(modulus). `modulus` is monic of degree e,
/// coefficients lowest degree first; it is empty for the prime field.
struct FiniteFieldSpec {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::vector<std::uint64_t> modulus;

  bool operator==(const FiniteFieldSpec&) const = default;

  BigInt size() const { return isect::pow(BigInt(p), e); }
};

/// Coordinates in the power basis 1, u, ..., u^{e-1}; each in [0, p).
class FFElement {
 public:
  using coord_type = std::uint64_t;
  using storage_type = boost::container::small_vector<coord_type, 4>;

  FFElement() = default;
  explicit FFElement(storage_type coords) : coords_(std::move(coords)) {}

  const storage_type& coords() const noexcept { return coords_; }
  storage_type& coords() noexcept { return coords_; }
  coord_type operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const FFElement&) const = default;

 private:
  storage_type coords_;
};

/// Canonical order: compare as base-p numerals, highest coordinate most significant.
inline bool canonical_less(const FFElement& a, const FFElement& b) {
  for (std::size_t i = a.coords().size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = m, r1 = a % m;
  while (r1 != 0) {
    std::uint64_t q = r0 / r1;
    std::uint64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    // q*t1 stays within the magnitude of m, so a 128-bit intermediate suffices
    auto t2 = static_cast<std::int64_t>(static_cast<__int128>(t0) - static_cast<__int128>(q) * t1);
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw error(errc::division_by_zero, "inverse of zero");
  return t0 < 0 ? static_cast<std::uint64_t>(t0 + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(t0);
}

}  // namespace detail

class FiniteField {
 public:
  using element_type = FFElement;

  /// Trusts `spec`; use make_field / make_extension_field for validated construction.
  explicit FiniteField(FiniteFieldSpec spec) : spec_(std::move(spec)), size_(spec_.size()) {
    if (spec_.p < 2 || spec_.p >= (std::uint64_t{1} << 62))
      throw error(errc::unsupported, "characteristic out of supported range");
    if (spec_.e == 0) throw error(errc::unsupported, "extension degree must be >= 1");
    if (spec_.e == 1) {
      spec_.modulus.clear();
    } else if (spec_.modulus.size() != spec_.e + 1 || spec_.modulus.back() != 1) {
      throw error(errc::unsupported, "modulus must be monic of degree e");
    }
  }

  static FiniteField prime_field(std::uint64_t p) {
    if (!is_prime(BigInt(p))) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    return FiniteField(FiniteFieldSpec{p, 1, {}});
  }

  const FiniteFieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t characteristic() const noexcept { return spec_.p; }
  unsigned degree() const noexcept { return spec_.e; }
  const BigInt& size() const noexcept { return size_; }
  bool is_prime_field() const noexcept { return spec_.e == 1; }

  bool operator==(const FiniteField& other) const { return spec_ == other.spec_; }

  FFElement zero() const { return FFElement(FFElement::storage_type(spec_.e, 0)); }
  FFElement one() const {
    FFElement r = zero();
    r.coords()[0] = 1;
    return r;
  }
  FFElement from_int(long long v) const {
    FFElement r = zero();
    auto p = static_cast<long long>(spec_.p);
    long long m = v % p;
    if (m < 0) m += p;
    r.coords()[0] = static_cast<std::uint64_t>(m);
    return r;
  }
  FFElement from_bigint(const BigInt& v) const {
    FFElement r = zero();
    r.coords()[0] = to_u64(mod_floor(v, BigInt(spec_.p)));
    return r;
  }
  /// The class of u (the generator of the power basis).
  FFElement generator() const {
    if (spec_.e == 1) throw error(errc::unsupported, "prime field has no adjoined generator");
    FFElement r = zero();
    r.coords()[1] = 1;
    return r;
  }
  FFElement from_coords(std::vector<std::uint64_t> c) const {
    if (c.size() > spec_.e) throw error(errc::spec_mismatch, "too many coordinates");
    FFElement r = zero();
    for (std::size_t i = 0; i < c.size(); ++i) r.coords()[i] = c[i] % spec_.p;
    return r;
  }

  bool is_zero(const FFElement& a) const {
    for (auto c : a.coords())
      if (c) return false;
    return true;
  }
  bool is_one(const FFElement& a) const {
    if (a.coords().empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.coords().size(); ++i)
      if (a[i]) return false;
    return true;
  }

  void check(const FFElement& a) const {
    if (a.coords().size() != spec_.e) throw error(errc::spec_mismatch, "element belongs to another field");
  }

  FFElement add(const FFElement& a, const FFElement& b) const {
    check(a);
    check(b);
    FFElement r = a;
    for (unsigned i = 0; i < spec_.e; ++i) {
      std::uint64_t s = a[i] + b[i];
      r.coords()[i] = s >= spec_.p ? s - spec_.p : s;
    }
    return r;
  }
  FFElement sub(const FFElement& a, const FFElement& b) const {
    check(a);
    check(b);
    FFElement r = a;
    for (unsigned i = 0; i < spec_.e; ++i) r.coords()[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + spec_.p - b[i];
    return r;
  }
  FFElement neg(const FFElement& a) const {
    check(a);
    FFElement r = a;
    for (auto& c : r.coords()) c = c ? spec_.p - c : 0;
    return r;
  }
  FFElement mul(const FFElement& a, const FFElement& b) const {
    check(a);
    check(b);
    const std::uint64_t p = spec_.p;
    if (spec_.e == 1) return FFElement(FFElement::storage_type{detail::mulmod_u64(a[0], b[0], p)});
    const unsigned e = spec_.e;
    boost::container::small_vector<std::uint64_t, 8> prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < e; ++j) {
        if (!b[j]) continue;
        prod[i + j] = (prod[i + j] + detail::mulmod_u64(a[i], b[j], p)) % p;
      }
    }
    // reduce by the monic modulus from the top down
    for (unsigned k = 2 * e - 1; k-- > e;) {
      std::uint64_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (unsigned j = 0; j < e; ++j) {
        std::uint64_t t = detail::mulmod_u64(c, spec_.modulus[j], p);
        prod[k - e + j] = (prod[k - e + j] + p - t) % p;
      }
    }
    FFElement r;
    r.coords().assign(prod.begin(), prod.begin() + e);
    return r;
  }
  FFElement scale(const FFElement& a, std::uint64_t k) const {
    check(a);
    FFElement r = a;
    for (auto& c : r.coords()) c = detail::mulmod_u64(c, k % spec_.p, spec_.p);
    return r;
  }

  /// Inverse by the extended Euclidean algorithm over F_p[u].
  FFElement inv(const FFElement& a) const {
    check(a);
    if (is_zero(a)) throw error(errc::division_by_zero, "inverse of zero");
    const std::uint64_t p = spec_.p;
    if (spec_.e == 1) return FFElement(FFElement::storage_type{detail::invmod_u64(a[0], p)});
    using Vec = std::vector<std::uint64_t>;
    auto trim = [](Vec& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    Vec r0(spec_.modulus.begin(), spec_.modulus.end()), r1(a.coords().begin(), a.coords().end());
    trim(r1);
    Vec s0{0}, s1{1};
    while (!r1.empty()) {
      // (q, rem) = divmod(r0, r1)
      Vec rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      std::uint64_t lead_inv = detail::invmod_u64(r1.back(), p);
      while (!rem.empty() && rem.size() >= r1.size()) {
        std::size_t shift = rem.size() - r1.size();
        std::uint64_t c = detail::mulmod_u64(rem.back(), lead_inv, p);
        q[shift] = c;
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[shift + j] = (rem[shift + j] + p - detail::mulmod_u64(c, r1[j], p)) % p;
        trim(rem);
      }
      // s2 = s0 - q*s1
      Vec s2(std::max(s0.size(), q.size() + s1.size()), 0);
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j)
          s2[i + j] = (s2[i + j] + p - detail::mulmod_u64(q[i], s1[j], p)) % p;
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    if (r0.size() != 1) throw error(errc::division_by_zero, "modulus is not irreducible");
    std::uint64_t c = detail::invmod_u64(r0[0], p);
    FFElement r = zero();
    for (std::size_t i = 0; i < s0.size() && i < spec_.e; ++i) r.coords()[i] = detail::mulmod_u64(s0[i], c, p);
    return r;
  }
  FFElement div(const FFElement& a, const FFElement& b) const { return mul(a, inv(b)); }

  FFElement pow(const FFElement& a, const BigInt& exp) const {
    if (exp < 0) return pow(inv(a), -exp);
    FFElement result = one();
    FFElement base = a;
    const unsigned bits = exp == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(exp)) + 1;
    for (unsigned i = 0; i < bits; ++i) {
      if (boost::multiprecision::bit_test(exp, i)) result = mul(result, base);
      if (i + 1 < bits) base = mul(base, base);
    }
    return result;
  }
  FFElement pow(const FFElement& a, std::uint64_t exp) const { return pow(a, BigInt(exp)); }

  /// Unique p-th root (the field is perfect): a^(q/p).
  FFElement pth_root(const FFElement& a) const { return pow(a, size_ / spec_.p); }

  /// Element whose coordinates are the base-p digits of `index`.
  FFElement element_from_index(std::uint64_t index) const {
    FFElement r = zero();
    for (unsigned i = 0; i < spec_.e; ++i) {
      r.coords()[i] = index % spec_.p;
      index /= spec_.p;
    }
    return r;
  }
  std::uint64_t index_of(const FFElement& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = spec_.e; i-- > 0;) idx = idx * spec_.p + a[i];
    return idx;
  }

  template <class Rng>
  FFElement random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec_.p - 1);
    FFElement r = zero();
    for (auto& c : r.coords()) c = dist(rng);
    return r;
  }

  /// Decimal for prime fields; a polynomial in u otherwise.
  std::string to_string(const FFElement& a) const {
    if (spec_.e == 1) return std::to_string(a[0]);
    std::string out;
    for (std::size_t i = spec_.e; i-- > 0;) {
      if (!a[i]) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += std::to_string(a[i]);
        continue;
      }
      if (a[i] != 1) out += std::to_string(a[i]) + "*";
      out += i == 1 ? "u" : "u^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  FiniteFieldSpec spec_;
  BigInt size_;
};

}  // namespace isect
