#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isect {

enum class errc {
  division_by_zero,
  spec_mismatch,
  both_zero,
  constant_input,
  zero_input,
  not_prime,
  zero_polynomial,
  ring_mismatch,
  not_primitive,
  inseparable_factor,
  product_mismatch,
  reducible_claimed_factor,
  wrong_ring,
  cap_exceeded,
  syntax_error,
  unknown_symbol,
  empty_input,
  unsupported,
};

constexpr std::string_view errc_name(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::both_zero: return "BothZero";
    case errc::constant_input: return "ConstantInput";
    case errc::zero_input: return "ZeroInput";
    case errc::not_prime: return "NotPrime";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_primitive: return "NotPrimitive";
    case errc::inseparable_factor: return "InseparableFactor";
    case errc::product_mismatch: return "ProductMismatch";
    case errc::reducible_claimed_factor: return "ReducibleClaimedFactor";
    case errc::wrong_ring: return "WrongRing";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::empty_input: return "EmptyInput";
    case errc::unsupported: return "Unsupported";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parser failure; `position` is a 0-based byte offset into the input text.
class parse_error : public error {
 public:
  parse_error(errc code, std::size_t position, const std::string& what)
      : error(code, what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace isect
