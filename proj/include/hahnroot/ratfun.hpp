#pragma once

#include <map>
#include <optional>
#include <string>

#include "hahnroot/ffpoly.hpp"
#include "hahnroot/terms.hpp"

namespace hahnroot {

/// Initial term c * t^v of a nonzero element.
struct LeadingTerm {
  Exponent v;
  FF c;
};

/**
 * Rational function in u = t^(1/M) over F_{p^k}: num/den with num, den
 * polynomials in u.
 *
 * Terms are keyed by their t-exponent (a multiple of 1/M), so rebasing to a
 * finer M never touches the terms. After every operation common powers of u
 * are cancelled and den is made monic. Common polynomial factors are
 * cancelled exactly when both sides have u-degree at most kDenseGcdLimit;
 * beyond that only common factors lying in F_{p^k}[t] are removed. Equality
 * is decided by cross-multiplication and never depends on the reduction.
 */
class RatFun {
 public:
  static constexpr unsigned long kDenseGcdLimit = 4096;

  explicit RatFun(FieldPtr ctx);
  RatFun(const FF& c);  // NOLINT: constants convert implicitly
  /// num/den; throws if den = 0 or an exponent is negative or not a
  /// multiple of 1/M.
  RatFun(TermPoly num, TermPoly den, mpz_class M = 1);

  /// c * t^e; M is the denominator of e.
  static RatFun monomial(const FF& c, const Exponent& e);
  /// A finite sum, with M the lcm of its exponent denominators.
  static RatFun from_terms(const TermPoly& sum);

  const FieldPtr& ctx() const { return num_.ctx(); }
  const mpz_class& M() const { return M_; }
  const TermPoly& num() const { return num_; }
  const TermPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  /// Same element over u_new = t^(1/M_new); requires M | M_new.
  RatFun rebase(const mpz_class& M_new) const;

  /// Numerator and denominator as polynomials in u (degree -> coefficient).
  std::map<mpz_class, FF> num_in_u() const;
  std::map<mpz_class, FF> den_in_u() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b);

  RatFun inverse() const;
  RatFun pow(long n) const;
  RatFun mapped(const Embedding& e) const;

  /// True when den is 1 and every exponent is an integer.
  bool is_polynomial_in_t() const;

  /// "2*t^(-5/27)", "(t^2 + 1)/(t^3)", "0".
  std::string str() const;

 private:
  void normalize();

  TermPoly num_;
  TermPoly den_;
  mpz_class M_ = 1;
};

/// Initial term, or nullopt for zero (infinite valuation).
std::optional<LeadingTerm> leading_term(const RatFun& a);

/// t-adic valuation; nullopt stands for +infinity.
std::optional<Exponent> valuation(const RatFun& a);

/// Laurent expansion of a, keeping the terms with exponent < below.
TermPoly laurent_expansion(const RatFun& a, const Exponent& below);

/// Dense polynomial in t of a sum with nonnegative integer exponents.
FFPoly dense_in_t(const TermPoly& a);
TermPoly from_dense_in_t(const FFPoly& a);

}  // namespace hahnroot
