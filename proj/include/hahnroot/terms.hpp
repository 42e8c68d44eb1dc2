#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hahnroot/ffield.hpp"

namespace hahnroot {

/// Exponents are exact rationals, always kept in lowest terms.
using Exponent = mpq_class;

Exponent make_exponent(long num, unsigned long den = 1);
/// Parses "3", "-1/3".
Exponent parse_exponent(const std::string& text);
/// "-1/3", "2".
std::string exponent_str(const Exponent& e);
/// "t^(-1/3)", "t^2", "t", "" for zero.
std::string power_of_t(const Exponent& e);

/// Exponent of the prime q in n (n != 0).
unsigned long q_adic_order(const mpz_class& n, unsigned long q);

/// Denominator of e written as p^e_p * m with gcd(m, p) = 1.
struct DenominatorSplit {
  unsigned long p_exponent;
  mpz_class coprime_part;
};
DenominatorSplit split_denominator(const Exponent& e, std::uint32_t p);

struct Term {
  Exponent exp;
  FF coeff;
};

/**
 * Finite sum of monomials c * t^e with rational e, sorted by exponent,
 * zero coefficients never stored. The exact carrier beneath both rational
 * functions and finite Hahn series.
 */
class TermPoly {
 public:
  explicit TermPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  /// Terms may be unsorted and contain repeats; they are merged.
  TermPoly(FieldPtr ctx, std::vector<Term> terms);

  static TermPoly constant(const FF& c);
  static TermPoly monomial(const FF& c, const Exponent& e);

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest exponent; throws for zero.
  const Exponent& valuation() const;
  const Term& lowest() const;
  const Term& highest() const;

  /// Coefficient at exponent e (zero if absent).
  FF coeff_at(const Exponent& e) const;
  /// lcm of exponent denominators (1 for zero).
  mpz_class denominator_lcm() const;

  TermPoly operator-() const;
  TermPoly& operator+=(const TermPoly& o);
  TermPoly& operator-=(const TermPoly& o);
  friend TermPoly operator+(TermPoly a, const TermPoly& b) { return a += b; }
  friend TermPoly operator-(TermPoly a, const TermPoly& b) { return a -= b; }
  friend TermPoly operator*(const TermPoly& a, const TermPoly& b);
  friend bool operator==(const TermPoly& a, const TermPoly& b);

  /// Multiply by c * t^e.
  TermPoly times_monomial(const FF& c, const Exponent& e) const;
  TermPoly scaled(const FF& c) const;
  TermPoly pow(unsigned n) const;

  /// Terms with exponent < r (or <= r when inclusive).
  TermPoly below(const Exponent& r, bool inclusive = false) const;

  TermPoly mapped(const Embedding& e) const;

  /// "t^(-1/3) + 2*t^(1/2)" in ascending order; "0" for zero.
  std::string str() const;

 private:
  void canonicalize();

  FieldPtr ctx_;
  std::vector<Term> terms_;
};

/// Rendering of a coefficient times t^e, used for series output.
std::string term_str(const FF& c, const Exponent& e);

}  // namespace hahnroot
