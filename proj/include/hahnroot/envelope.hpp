#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hahnroot/ore.hpp"

namespace hahnroot {

/// gamma_i(r) = intercept + slope * r with intercept = v(a_i), slope = p^i.
struct EnvelopeLine {
  unsigned i;
  Exponent intercept;
  mpz_class slope;
};

std::vector<EnvelopeLine> envelope_lines(const AdditivePolynomial& P);

/// A point where at least two lines attain the minimum; r unset means
/// infinity.
struct Breakpoint {
  std::optional<Exponent> r;
  std::vector<unsigned> J;
  bool is_infinite() const { return !r.has_value(); }
};

/// Finite points ascending, then the point at infinity when |I_P| >= 2.
std::vector<Breakpoint> intersection_points(const AdditivePolynomial& P);

/// Indices attaining min_i gamma_i(r).
std::vector<unsigned> argmin_lines(const std::vector<EnvelopeLine>& lines, const Exponent& r);

/// lcm of the parts prime to p of the denominators of the finite
/// intersection points of addpol(f); 1 when there are none.
mpz_class maxram(const Poly& f);
mpz_class maxram(const AdditivePolynomial& P);

enum class MaxExpMode { paper, sharp };

/// Residue field degree bound D!. With MaxExpMode::paper, D = p^(n(n+1)/2). Sharp
/// mode: D = product over finite points s of p^(max J(s)). The factorial
/// is only expanded while D <= kFactorialLimit.
struct MaxExpBound {
  static constexpr unsigned long kFactorialLimit = 1ul << 20;
  MaxExpMode mode;
  mpz_class base;
  std::optional<mpz_class> value;
};
MaxExpBound maxexp(const Poly& f, MaxExpMode mode);
MaxExpBound maxexp_sharp(const AdditivePolynomial& P);

/// m = number of intersection points of addpol(f); the order type of any
/// root's support is at most omega^m.
struct OrderTypeBound {
  unsigned m;
  std::string label;
};
OrderTypeBound order_type_bound(const Poly& f);
OrderTypeBound order_type_bound(const AdditivePolynomial& P);

}  // namespace hahnroot
