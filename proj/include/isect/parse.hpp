#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "bigint.hpp"
#include "error.hpp"
#include "rings.hpp"
#include "upoly.hpp"

namespace isect {

/// Largest exponent accepted after '^'.
inline constexpr unsigned max_parse_exponent = 100000;

namespace detail {

template <class Ring>
class PolyParser {
 public:
  using P = UPoly<Ring>;

  PolyParser(std::string_view text, const Ring& R) : s_(text), R_(R) {}

  P parse() {
    skip();
    if (pos_ == s_.size()) throw parse_error(errc::empty_input, 0, "empty polynomial");
    P f = poly();
    skip();
    if (pos_ != s_.size()) unexpected();
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= s_.size()) throw parse_error(errc::syntax_error, pos_, "unexpected end of input");
    throw parse_error(errc::syntax_error, pos_, std::string("unexpected '") + s_[pos_] + "'");
  }

  P poly() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    P acc = term();
    if (neg) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      P t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  P term() {
    P acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  P factor() {
    P b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    unsigned long long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (e > max_parse_exponent) throw parse_error(errc::syntax_error, start, "exponent too large");
      ++pos_;
    }
    if (pos_ == start) unexpected();
    P r = P::constant(R_, R_.one());
    for (auto k = static_cast<unsigned>(e); k; k >>= 1U) {
      if (k & 1U) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  P base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      P inner = poly();
      if (peek() != ')') unexpected();
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigInt v(std::string(s_.substr(start, pos_ - start)));
      return P::constant(R_, R_.from_bigint(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      if (id == "x") return P::x(R_);
      if constexpr (Ring::is_function_field) {
        if (id == "T") return P::constant(R_, R_.T());
        // generator of F_q over F_p, as printed by the field
        if (id == "u" && !R_.field()->is_prime_field()) return P::constant(R_, R_.constant(R_.field()->generator()));
      }
      throw parse_error(errc::unknown_symbol, start, "unknown symbol '" + std::string(id) + "'");
    }
    unexpected();
  }

  std::string_view s_;
  const Ring& R_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and expands a polynomial in x. Over F_q[T] the symbol T is the variable of the
/// coefficient ring, integer literals reduce mod p, and for non-prime q the symbol u is the
/// generator of F_q over F_p.
template <class Ring>
UPoly<Ring> parse_poly(std::string_view text, const Ring& R) {
  return detail::PolyParser<Ring>(text, R).parse();
}

}  // namespace isect
