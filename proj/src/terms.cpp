#include "hahnroot/terms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hahnroot {

Exponent make_exponent(long num, unsigned long den) {
  Exponent e(num, den);
  e.canonicalize();
  return e;
}

Exponent parse_exponent(const std::string& text) {
  Exponent e;
  if (e.set_str(text, 10) != 0 || e.get_den() == 0) throw std::invalid_argument("bad exponent '" + text + "'");
  e.canonicalize();
  return e;
}

std::string exponent_str(const Exponent& e) { return e.get_str(); }

std::string power_of_t(const Exponent& e) {
  if (e == 0) return "";
  if (e == 1) return "t";
  if (e.get_den() == 1 && e > 0) return "t^" + e.get_str();
  return "t^(" + e.get_str() + ")";
}

unsigned long q_adic_order(const mpz_class& n, unsigned long q) {
  if (n == 0) throw std::invalid_argument("q-adic order of zero");
  mpz_class m = abs(n);
  unsigned long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
    ++k;
  }
  return k;
}

DenominatorSplit split_denominator(const Exponent& e, std::uint32_t p) {
  mpz_class d = e.get_den();
  unsigned long k = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    ++k;
  }
  return {k, d};
}

std::string term_str(const FF& c, const Exponent& e) {
  std::string cs = c.str();
  std::string tp = power_of_t(e);
  if (tp.empty()) return cs;
  if (c.is_one()) return tp;
  if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
  return cs + "*" + tp;
}

// ---------------------------------------------------------- TermPoly

TermPoly::TermPoly(FieldPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  canonicalize();
}

void TermPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

TermPoly TermPoly::constant(const FF& c) { return monomial(c, Exponent(0)); }

TermPoly TermPoly::monomial(const FF& c, const Exponent& e) {
  TermPoly r(c.ctx());
  if (!c.is_zero()) r.terms_.push_back({e, c});
  return r;
}

const Exponent& TermPoly::valuation() const { return lowest().exp; }

const Term& TermPoly::lowest() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero");
  return terms_.front();
}

const Term& TermPoly::highest() const {
  if (terms_.empty()) throw std::domain_error("degree of zero");
  return terms_.back();
}

FF TermPoly::coeff_at(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return FF::zero(ctx_);
}

mpz_class TermPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.exp.get_den_mpz_t());
  return l;
}

TermPoly TermPoly::operator-() const {
  TermPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class Op>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, op(FF::zero(b[j].coeff.ctx()), b[j].coeff)});
      ++j;
    } else {
      FF c = op(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TermPoly& TermPoly::operator+=(const TermPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const FF& x, const FF& y) { return x + y; });
  return *this;
}

TermPoly& TermPoly::operator-=(const TermPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const FF& x, const FF& y) { return x - y; });
  return *this;
}

TermPoly operator*(const TermPoly& a, const TermPoly& b) {
  if (a.is_zero() || b.is_zero()) return TermPoly(a.ctx_);
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].coeff, b.terms_[0].exp);
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].coeff, a.terms_[0].exp);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
  }
  return TermPoly(a.ctx_, std::move(prod));
}

bool operator==(const TermPoly& a, const TermPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

TermPoly TermPoly::times_monomial(const FF& c, const Exponent& e) const {
  TermPoly r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp + e, t.coeff * c});
  return r;
}

TermPoly TermPoly::scaled(const FF& c) const { return times_monomial(c, Exponent(0)); }

TermPoly TermPoly::pow(unsigned n) const {
  TermPoly r = constant(FF::one(ctx_));
  TermPoly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

TermPoly TermPoly::below(const Exponent& r, bool inclusive) const {
  TermPoly out(ctx_);
  for (const auto& t : terms_) {
    if (t.exp < r || (inclusive && t.exp == r)) out.terms_.push_back(t);
  }
  return out;
}

TermPoly TermPoly::mapped(const Embedding& e) const {
  TermPoly out(e.to());
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.exp, e(t.coeff)});
  return out;
}

std::string TermPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += term_str(t.coeff, t.exp);
  }
  return s;
}

}  // namespace hahnroot
