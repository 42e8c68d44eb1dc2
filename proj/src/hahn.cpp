#include "hahnroot/hahn.hpp"

#include <numeric>
#include <stdexcept>

namespace hahnroot {

namespace {

std::optional<Exponent> min_bound(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

HahnSeries::HahnSeries(TermPoly terms, std::optional<Exponent> known_below)
    : terms_(std::move(terms)), known_below_(std::move(known_below)) {
  if (known_below_ && !terms_.is_zero() && terms_.highest().exp >= *known_below_) {
    throw std::invalid_argument("stored term at or above the precision bound");
  }
}

std::vector<Exponent> HahnSeries::support() const {
  std::vector<Exponent> out;
  for (const auto& t : terms_.terms()) out.push_back(t.exp);
  return out;
}

std::vector<FF> HahnSeries::coefficients() const {
  std::vector<FF> out;
  for (const auto& t : terms_.terms()) out.push_back(t.coeff);
  return out;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
  auto bound = min_bound(a.known_below_, b.known_below_);
  TermPoly s = a.terms_ + b.terms_;
  return HahnSeries(bound ? s.below(*bound) : s, bound);
}

HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) {
  auto bound = min_bound(a.known_below_, b.known_below_);
  TermPoly s = a.terms_ - b.terms_;
  return HahnSeries(bound ? s.below(*bound) : s, bound);
}

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  // An unknown tail of a at exponents >= ra meets b starting at v(b).
  std::optional<Exponent> bound;
  if (a.known_below_) {
    if (b.is_zero() && b.is_exact()) return HahnSeries(a.ctx());
    Exponent vb = b.is_zero() ? *b.known_below_ : b.terms_.valuation();
    bound = *a.known_below_ + vb;
  }
  if (b.known_below_) {
    if (a.is_zero() && a.is_exact()) return HahnSeries(a.ctx());
    Exponent va = a.is_zero() ? *a.known_below_ : a.terms_.valuation();
    bound = min_bound(bound, *b.known_below_ + va);
  }
  TermPoly s = a.terms_ * b.terms_;
  return HahnSeries(bound ? s.below(*bound) : s, bound);
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
  return a.known_below_ == b.known_below_ && a.terms_ == b.terms_;
}

RatFun HahnSeries::to_ratfun() const {
  if (!is_exact()) throw std::invalid_argument("a truncated series is not an exact element");
  return RatFun::from_terms(terms_);
}

HahnSeries HahnSeries::mapped(const Embedding& e) const { return HahnSeries(terms_.mapped(e), known_below_); }

std::string HahnSeries::str() const {
  if (is_exact()) return terms_.str();
  const std::string tail = "O(" + (known_below_->get_num() == 0 ? std::string("1") : power_of_t(*known_below_)) + ")";
  if (terms_.is_zero()) return tail;
  return terms_.str() + " + " + tail;
}

HahnSeries truncate(const HahnSeries& x, const Exponent& r, bool inclusive) {
  TermPoly kept = x.terms().below(r, inclusive);
  const auto& kb = x.known_below();
  if (!kb) return HahnSeries(std::move(kept));
  // Cut strictly inside the known part: the result is fully determined.
  if (r < *kb) return HahnSeries(std::move(kept));
  return HahnSeries(std::move(kept), kb);
}

bool is_approximation(const HahnSeries& y, const HahnSeries& x) {
  if (!y.is_exact() || !x.is_exact()) throw std::invalid_argument("approximation test needs exact term lists");
  const auto& ys = y.terms().terms();
  const auto& xs = x.terms().terms();
  if (ys.size() >= xs.size()) return false;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i].exp != xs[i].exp || !(ys[i].coeff == xs[i].coeff)) return false;
  }
  return true;
}

bool ramifies_at(std::span<const Exponent> support, const Exponent& r, unsigned long q) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  const unsigned long K = q_adic_order(r.get_den(), q);
  if (K < 1) return false;
  for (const auto& s : support) {
    if (s >= r) continue;
    if (q_adic_order(s.get_den(), q) >= K) return false;
  }
  return true;
}

bool expands_at(std::span<const FF> prefix_coeffs, const FF& zeta) {
  unsigned long d = 1;
  for (const auto& c : prefix_coeffs) d = std::lcm(d, static_cast<unsigned long>(c.degree()));
  return d % zeta.degree() != 0;
}

nlohmann::json term_to_json(const Term& t) { return {{"exp", exponent_str(t.exp)}, {"coeff", t.coeff.str()}}; }

nlohmann::json to_json(const HahnSeries& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : x.terms().terms()) terms.push_back(term_to_json(t));
  nlohmann::json j{{"p", x.ctx()->p()}, {"field", x.ctx()->description()}, {"terms", terms}};
  if (x.is_exact()) {
    j["precision"] = "exact";
  } else {
    j["precision"] = {{"known_below", exponent_str(*x.known_below())}};
  }
  return j;
}

HahnSeries series_from_json(const nlohmann::json& j) {
  FieldPtr ctx = parse_field(j.at("field").get<std::string>());
  if (j.at("p").get<std::uint32_t>() != ctx->p()) throw std::invalid_argument("characteristic does not match field");
  std::vector<Term> ts;
  for (const auto& t : j.at("terms")) {
    ts.push_back({parse_exponent(t.at("exp").get<std::string>()), FF::parse(ctx, t.at("coeff").get<std::string>())});
  }
  TermPoly terms(ctx, std::move(ts));
  const auto& prec = j.at("precision");
  if (prec.is_string()) {
    if (prec.get<std::string>() != "exact") throw std::invalid_argument("unknown precision marker");
    return HahnSeries(std::move(terms));
  }
  return HahnSeries(std::move(terms), parse_exponent(prec.at("known_below").get<std::string>()));
}

}  // namespace hahnroot
