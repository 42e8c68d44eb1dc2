#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hahnroot/hasse.hpp"

namespace hahnroot {

/// Syntax error with the 0-based character offset it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/**
 * Reads a polynomial in X with coefficients in F_p(t), e.g.
 * "X^3 - X^2 - 1/t" or "(t^2+1)/(t^3)*X - t". Integers are reduced mod p.
 * Terms are products and quotients of integers, powers of t and X, and
 * parenthesized subexpressions; divisors must not involve X.
 */
Poly parse_polynomial(const std::string& text, std::uint32_t p);

/// Canonical rendering read back identically by parse_polynomial:
/// descending powers of X, integers as symmetric residues mod p.
std::string format_polynomial(const Poly& f);

/// Same conventions for a single coefficient, e.g. "-1/t", "(t^2 + 1)/(t^3)".
std::string format_coefficient(const RatFun& c);

}  // namespace hahnroot
