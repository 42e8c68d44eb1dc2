#pragma once

#include <map>
#include <string>
#include <vector>

#include "hahnroot/ffield.hpp"

namespace hahnroot {

/// Dense univariate polynomial over a finite field, coefficients low to high.
class FFPoly {
 public:
  explicit FFPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  FFPoly(FieldPtr ctx, std::vector<FF> coeffs);

  static FFPoly constant(const FF& c);
  static FFPoly monomial(const FF& c, std::size_t degree);
  /// X - a
  static FFPoly linear_root(const FF& a);

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<FF>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FF coeff(std::size_t i) const;
  FF leading() const;

  FFPoly monic() const;
  FFPoly derivative() const;
  FF operator()(const FF& x) const;

  FFPoly operator-() const;
  FFPoly& operator+=(const FFPoly& o);
  FFPoly& operator-=(const FFPoly& o);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator*(const FFPoly& a, const FF& c);
  friend bool operator==(const FFPoly& a, const FFPoly& b);

  /// Quotient and remainder; throws on division by zero.
  std::pair<FFPoly, FFPoly> divmod(const FFPoly& d) const;
  FFPoly operator%(const FFPoly& d) const { return divmod(d).second; }
  FFPoly operator/(const FFPoly& d) const { return divmod(d).first; }

  /// Coefficients moved through a field embedding.
  FFPoly mapped(const Embedding& e) const;

  /// Rendered in the variable `var`, descending degree, e.g. "z^3+z".
  std::string str(const std::string& var = "X") const;

 private:
  void trim();

  FieldPtr ctx_;
  std::vector<FF> c_;
};

/// Monic gcd (zero if both are zero).
FFPoly gcd(FFPoly a, FFPoly b);
/// base^e mod m.
FFPoly powmod(const FFPoly& base, const mpz_class& e, const FFPoly& m);

/// Rabin-style irreducibility test over the coefficient field.
bool is_irreducible(const FFPoly& f);

struct RootWithMultiplicity {
  FF value;
  unsigned multiplicity;
};

/// All roots of g in its splitting field. `embedding` maps the field of g
/// into `field`, in which every root is expressed. Roots are in canonical
/// order.
struct RootSet {
  FieldPtr field;
  Embedding embedding;
  std::vector<RootWithMultiplicity> roots;
};

/// Throws std::invalid_argument for g = 0 or constant g.
RootSet poly_roots(const FFPoly& g);

/// Degrees of the distinct irreducible factors of g over its own field.
std::vector<unsigned> factor_degrees(const FFPoly& g);

/// Solutions of sum_j b_j z^(p^j) = c, computed by F_p-linear algebra on
/// coordinate vectors over successively larger fields until the full
/// solution count is reached.
struct FrobeniusSolution {
  /// false when every b_j is zero but c is not.
  bool consistent = true;
  FieldPtr field;
  Embedding embedding;
  std::vector<FF> solutions;
};

FrobeniusSolution frobenius_solve(const std::map<unsigned, FF>& b, const FF& c);

}  // namespace hahnroot
