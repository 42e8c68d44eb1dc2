#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hahnroot/hahn.hpp"
#include "hahnroot/ratfun.hpp"

namespace hahnroot {

/// Polynomial in X with rational-function coefficients a_0..a_n.
class Poly {
 public:
  explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldPtr ctx, std::vector<RatFun> coeffs);

  static Poly constant(const RatFun& c);
  static Poly monomial(const RatFun& c, std::size_t degree);
  static Poly X(FieldPtr ctx) { return monomial(RatFun(FF::one(ctx)), 1); }

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<RatFun>& coeffs() const { return c_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFun coeff(std::size_t i) const;
  const RatFun& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const RatFun& c);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;

  /// Horner evaluation. The argument may live in an extension of ctx().
  RatFun operator()(const RatFun& x) const;

  Poly mapped(const Embedding& e) const;

 private:
  void trim();

  FieldPtr ctx_;
  std::vector<RatFun> c_;
};

/// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod(const mpz_class& n, const mpz_class& k, std::uint32_t p);

/// D^(k) f = sum_{j} C(j+k, k) a_{j+k} X^j.
Poly hasse_derivative(const Poly& f, unsigned k);

/// [D^(0)f(l), ..., D^(n)f(l)], the coefficients of f in powers of X - l.
std::vector<RatFun> taylor_coeffs(const Poly& f, const RatFun& lambda);

RatFun evaluate(const Poly& f, const RatFun& w);
/// w must be exact.
RatFun evaluate(const Poly& f, const HahnSeries& w);

/// Initial term b * t^rho of D^(i) f(w); the line is r -> rho + i*r.
struct NewtonLine {
  unsigned i;
  Exponent rho;
  FF b;
};

/// One line for each i in 1..deg f with D^(i) f(w) != 0.
std::vector<NewtonLine> newton_data(const Poly& f, const HahnSeries& w);

/// Minimum of the lines at r and the indices attaining it. A missing r or
/// gamma stands for infinity; at infinity every line attains the minimum.
struct GammaJ {
  std::optional<Exponent> gamma;
  std::vector<unsigned> J;
};
GammaJ gamma_J(std::span<const NewtonLine> lines, const std::optional<Exponent>& r);

}  // namespace hahnroot
