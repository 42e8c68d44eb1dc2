#pragma once

#include <map>
#include <string>
#include <vector>

#include "hahnroot/hasse.hpp"

namespace hahnroot {

/// P(X) = sum_i a_i X^(p^i) with a_i in F_p(t), at least one a_i nonzero.
class AdditivePolynomial {
 public:
  AdditivePolynomial(FieldPtr ctx, std::map<unsigned, RatFun> coeffs);

  const FieldPtr& ctx() const { return ctx_; }
  std::uint32_t p() const { return ctx_->p(); }
  /// Only nonzero entries are kept.
  const std::map<unsigned, RatFun>& coeffs() const { return coeffs_; }
  /// I_P, ascending.
  std::vector<unsigned> support() const;
  /// Largest i in I_P.
  unsigned top_index() const { return coeffs_.rbegin()->first; }

  Poly to_poly() const;

 private:
  FieldPtr ctx_;
  std::map<unsigned, RatFun> coeffs_;
};

/**
 * An additive multiple of f. The reductions X^(p^i) mod f, i = 0..deg f,
 * are linearly dependent over F_p(t); the first dependency (smallest top
 * index i) is taken, cleared of denominators, made primitive in F_p[t] and
 * scaled so the top coefficient has leading coefficient 1.
 */
AdditivePolynomial addpol(const Poly& f);

/// Every monomial exponent is a power of p (the zero polynomial counts).
bool is_additive(const Poly& P);

}  // namespace hahnroot
