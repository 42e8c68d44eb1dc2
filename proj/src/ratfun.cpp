#include "hahnroot/ratfun.hpp"

#include <stdexcept>

#include "hahnroot/ffpoly.hpp"

namespace hahnroot {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// u-degree of exponent e for the given M.
mpz_class u_degree(const Exponent& e, const mpz_class& M) {
  mpq_class d = e * mpq_class(M);
  d.canonicalize();
  if (d.get_den() != 1) throw std::invalid_argument("exponent " + e.get_str() + " is not a multiple of 1/" + M.get_str());
  return d.get_num();
}

FFPoly to_dense(const TermPoly& a, const mpz_class& M) {
  std::vector<FF> cs;
  for (const auto& t : a.terms()) {
    const auto idx = u_degree(t.exp, M).get_ui();
    if (cs.size() <= idx) cs.resize(idx + 1, FF::zero(a.ctx()));
    cs[idx] = t.coeff;
  }
  return FFPoly(a.ctx(), std::move(cs));
}

TermPoly from_dense(const FFPoly& a, const mpz_class& M, const Exponent& shift = Exponent(0)) {
  std::vector<Term> ts;
  const auto& cs = a.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    Exponent e(mpz_class(static_cast<unsigned long>(i)), M);
    e.canonicalize();
    ts.push_back({e + shift, cs[i]});
  }
  return TermPoly(a.ctx(), std::move(ts));
}

/// Splits a (nonnegative exponents) by fractional part of the exponent;
/// each class becomes a dense polynomial in t.
std::map<Exponent, FFPoly> residue_classes(const TermPoly& a) {
  std::map<Exponent, std::vector<Term>> buckets;
  for (const auto& t : a.terms()) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.exp.get_num_mpz_t(), t.exp.get_den_mpz_t());
    Exponent frac = t.exp - mpq_class(fl);
    buckets[frac].push_back({mpq_class(fl), t.coeff});
  }
  std::map<Exponent, FFPoly> out;
  for (auto& [frac, ts] : buckets) out.emplace(frac, to_dense(TermPoly(a.ctx(), std::move(ts)), 1));
  return out;
}

TermPoly from_classes(const std::map<Exponent, FFPoly>& classes, const FieldPtr& ctx) {
  TermPoly out(ctx);
  for (const auto& [frac, poly] : classes) out += from_dense(poly, 1, frac);
  return out;
}

}  // namespace

RatFun::RatFun(FieldPtr ctx) : num_(ctx), den_(TermPoly::constant(FF::one(ctx))) {}

RatFun::RatFun(const FF& c) : num_(TermPoly::constant(c)), den_(TermPoly::constant(FF::one(c.ctx()))) {}

RatFun::RatFun(TermPoly num, TermPoly den, mpz_class M) : num_(std::move(num)), den_(std::move(den)), M_(std::move(M)) {
  if (M_ <= 0) throw std::invalid_argument("M must be positive");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  for (const auto* part : {&num_, &den_}) {
    for (const auto& t : part->terms()) {
      if (t.exp < 0) throw std::invalid_argument("numerator and denominator must be polynomials in u");
      (void)u_degree(t.exp, M_);
    }
  }
  normalize();
}

RatFun RatFun::monomial(const FF& c, const Exponent& e) {
  mpz_class M = e.get_den();
  const auto& ctx = c.ctx();
  if (e >= 0) return RatFun(TermPoly::monomial(c, e), TermPoly::constant(FF::one(ctx)), M);
  return RatFun(TermPoly::constant(c), TermPoly::monomial(FF::one(ctx), -e), M);
}

RatFun RatFun::from_terms(const TermPoly& sum) {
  const auto& ctx = sum.ctx();
  mpz_class M = sum.denominator_lcm();
  if (sum.is_zero()) return RatFun(ctx);
  Exponent v = sum.valuation();
  if (v >= 0) return RatFun(sum, TermPoly::constant(FF::one(ctx)), M);
  return RatFun(sum.times_monomial(FF::one(ctx), -v), TermPoly::monomial(FF::one(ctx), -v), M);
}

bool RatFun::is_one() const { return num_ == den_; }

void RatFun::normalize() {
  const auto& ctx = num_.ctx();
  if (num_.is_zero()) {
    den_ = TermPoly::constant(FF::one(ctx));
    return;
  }
  Exponent shift = std::min(num_.valuation(), den_.valuation());
  if (shift != 0) {
    num_ = num_.times_monomial(FF::one(ctx), -shift);
    den_ = den_.times_monomial(FF::one(ctx), -shift);
  }
  if (den_.size() > 1) {
    const mpz_class top = std::max(u_degree(num_.highest().exp, M_), u_degree(den_.highest().exp, M_));
    if (top <= kDenseGcdLimit) {
      FFPoly n = to_dense(num_, M_), d = to_dense(den_, M_);
      FFPoly g = gcd(n, d);
      if (g.degree() > 0) {
        num_ = from_dense(n / g, M_);
        den_ = from_dense(d / g, M_);
      }
    } else {
      auto nc = residue_classes(num_), dc = residue_classes(den_);
      FFPoly g(ctx);
      for (const auto* cls : {&nc, &dc}) {
        for (const auto& [frac, poly] : *cls) g = gcd(g, poly);
      }
      if (g.degree() > 0) {
        for (auto* cls : {&nc, &dc}) {
          for (auto& [frac, poly] : *cls) poly = poly / g;
        }
        num_ = from_classes(nc, ctx);
        den_ = from_classes(dc, ctx);
      }
    }
  }
  FF lc = den_.highest().coeff;
  if (!lc.is_one()) {
    FF inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::rebase(const mpz_class& M_new) const {
  if (M_new <= 0 || !mpz_divisible_p(M_new.get_mpz_t(), M_.get_mpz_t())) {
    throw std::invalid_argument("rebase: " + M_.get_str() + " does not divide " + M_new.get_str());
  }
  RatFun r = *this;
  r.M_ = M_new;
  return r;
}

std::map<mpz_class, FF> RatFun::num_in_u() const {
  std::map<mpz_class, FF> out;
  for (const auto& t : num_.terms()) out.emplace(u_degree(t.exp, M_), t.coeff);
  return out;
}

std::map<mpz_class, FF> RatFun::den_in_u() const {
  std::map<mpz_class, FF> out;
  for (const auto& t : den_.terms()) out.emplace(u_degree(t.exp, M_), t.coeff);
  return out;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  M_ = lcm(M_, o.M_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  M_ = lcm(M_, o.M_);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  RatFun r = *this;
  std::swap(r.num_, r.den_);
  r.normalize();
  return r;
}

RatFun RatFun::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFun r(FF::one(ctx()));
  r.M_ = M_;
  RatFun b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

RatFun RatFun::mapped(const Embedding& e) const {
  RatFun r(e.to());
  r.num_ = num_.mapped(e);
  r.den_ = den_.mapped(e);
  r.M_ = M_;
  return r;
}

bool RatFun::is_polynomial_in_t() const {
  if (!(den_.is_monomial() && den_.lowest().exp == 0 && den_.lowest().coeff.is_one())) return false;
  for (const auto& t : num_.terms()) {
    if (t.exp.get_den() != 1) return false;
  }
  return true;
}

std::string RatFun::str() const {
  if (is_zero()) return "0";
  if (den_.is_monomial() && den_.lowest().exp == 0) return num_.str();
  if (num_.is_monomial() && den_.is_monomial()) {
    auto lt = *leading_term(*this);
    return term_str(lt.c, lt.v);
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<LeadingTerm> leading_term(const RatFun& a) {
  if (a.is_zero()) return std::nullopt;
  const auto& n = a.num().lowest();
  const auto& d = a.den().lowest();
  return LeadingTerm{n.exp - d.exp, n.coeff / d.coeff};
}

std::optional<Exponent> valuation(const RatFun& a) {
  if (a.is_zero()) return std::nullopt;
  return a.num().valuation() - a.den().valuation();
}

TermPoly laurent_expansion(const RatFun& a, const Exponent& below) {
  TermPoly out(a.ctx());
  TermPoly rem = a.num();
  const Term d0 = a.den().lowest();
  const FF inv = d0.coeff.inverse();
  while (!rem.is_zero()) {
    Exponent e = rem.valuation() - d0.exp;
    if (e >= below) break;
    FF c = rem.lowest().coeff * inv;
    out += TermPoly::monomial(c, e);
    rem -= a.den().times_monomial(c, e);
  }
  return out;
}

FFPoly dense_in_t(const TermPoly& a) {
  std::vector<FF> cs;
  for (const auto& t : a.terms()) {
    if (t.exp.get_den() != 1 || t.exp < 0) throw std::invalid_argument("not a polynomial in t");
    const auto k = t.exp.get_num().get_ui();
    if (cs.size() <= k) cs.resize(k + 1, FF::zero(a.ctx()));
    cs[k] = t.coeff;
  }
  return FFPoly(a.ctx(), std::move(cs));
}

TermPoly from_dense_in_t(const FFPoly& a) { return from_dense(a, 1); }

}  // namespace hahnroot
