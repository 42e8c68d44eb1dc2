#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hahnroot/ratfun.hpp"
#include "hahnroot/terms.hpp"

namespace hahnroot {

/**
 * Finite prefix of a generalized power series.
 *
 * With known_below unset the term list is the whole element. With
 * known_below = r the terms are the truncation x_{<r} of some element whose
 * remaining terms are unknown.
 */
class HahnSeries {
 public:
  explicit HahnSeries(FieldPtr ctx) : terms_(std::move(ctx)) {}
  explicit HahnSeries(TermPoly terms, std::optional<Exponent> known_below = std::nullopt);

  static HahnSeries exact(TermPoly terms) { return HahnSeries(std::move(terms)); }
  static HahnSeries known_below(TermPoly terms, Exponent r) { return HahnSeries(std::move(terms), std::move(r)); }

  const FieldPtr& ctx() const { return terms_.ctx(); }
  const TermPoly& terms() const { return terms_; }
  bool is_exact() const { return !known_below_.has_value(); }
  const std::optional<Exponent>& known_below() const { return known_below_; }
  bool is_zero() const { return terms_.is_zero(); }

  std::vector<Exponent> support() const;
  std::vector<FF> coefficients() const;

  /// Arithmetic; the result is known below the smallest exponent at which
  /// an unknown tail can contribute.
  friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);
  friend bool operator==(const HahnSeries& a, const HahnSeries& b);

  /// Exact series as an element of F_q(t^(1/M)); throws for a prefix.
  RatFun to_ratfun() const;
  HahnSeries mapped(const Embedding& e) const;

  /// "t^(-1/3) + t^(-2/9) + O(t^(-1/6))"
  std::string str() const;

 private:
  TermPoly terms_;
  std::optional<Exponent> known_below_;
};

/// x_{<r}, or x_{<=r} when inclusive. The result is exact when x is exact
/// or the cut lies inside the known part; otherwise it keeps x's bound.
HahnSeries truncate(const HahnSeries& x, const Exponent& r, bool inclusive = false);

/// y = x_{<l} for some l, and y != x. Both must be exact.
bool is_approximation(const HahnSeries& y, const HahnSeries& x);

/// Does the prime q ramify at r, given the support elements seen so far?
/// Only the elements below r are consulted.
bool ramifies_at(std::span<const Exponent> support, const Exponent& r, unsigned long q);

/// Is zeta outside the smallest field holding every prefix coefficient?
bool expands_at(std::span<const FF> prefix_coeffs, const FF& zeta);

nlohmann::json term_to_json(const Term& t);
nlohmann::json to_json(const HahnSeries& x);
/// Reads the object written by to_json, rebuilding the field from its
/// description.
HahnSeries series_from_json(const nlohmann::json& j);

}  // namespace hahnroot
