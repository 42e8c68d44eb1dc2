#include "hahnroot/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace hahnroot {

namespace {

Exponent crossing(const EnvelopeLine& a, const EnvelopeLine& b) {
  Exponent r = (b.intercept - a.intercept) / Exponent(a.slope - b.slope);
  r.canonicalize();
  return r;
}

MaxExpBound with_value(MaxExpMode mode, mpz_class base) {
  MaxExpBound out{mode, std::move(base), std::nullopt};
  if (out.base <= MaxExpBound::kFactorialLimit) {
    mpz_class v;
    mpz_fac_ui(v.get_mpz_t(), out.base.get_ui());
    out.value = v;
  }
  return out;
}

}  // namespace

std::vector<EnvelopeLine> envelope_lines(const AdditivePolynomial& P) {
  std::vector<EnvelopeLine> out;
  for (const auto& [i, a] : P.coeffs()) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), P.p(), i);
    out.push_back({i, *valuation(a), s});
  }
  return out;
}

std::vector<unsigned> argmin_lines(const std::vector<EnvelopeLine>& lines, const Exponent& r) {
  std::vector<unsigned> J;
  std::optional<Exponent> best;
  for (const auto& l : lines) {
    const Exponent g = l.intercept + Exponent(l.slope) * r;
    if (!best || g < *best) {
      best = g;
      J = {l.i};
    } else if (g == *best) {
      J.push_back(l.i);
    }
  }
  return J;
}

std::vector<Breakpoint> intersection_points(const AdditivePolynomial& P) {
  auto lines = envelope_lines(P);
  // Steepest first: that line is lowest as r -> -infinity.
  std::vector<EnvelopeLine> sorted = lines;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.slope > b.slope; });
  std::vector<EnvelopeLine> hull;
  for (const auto& l : sorted) {
    while (hull.size() >= 2 && crossing(hull[hull.size() - 2], l) <= crossing(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  std::vector<Breakpoint> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Exponent r = crossing(hull[k], hull[k + 1]);
    out.push_back({r, argmin_lines(lines, r)});
  }
  if (lines.size() >= 2) out.push_back({std::nullopt, P.support()});
  return out;
}

mpz_class maxram(const AdditivePolynomial& P) {
  mpz_class m = 1;
  for (const auto& bp : intersection_points(P)) {
    if (bp.is_infinite()) continue;
    const mpz_class c = split_denominator(*bp.r, P.p()).coprime_part;
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_mpz_t());
  }
  return m;
}

mpz_class maxram(const Poly& f) { return maxram(addpol(f)); }

MaxExpBound maxexp_sharp(const AdditivePolynomial& P) {
  mpz_class base = 1, pk;
  for (const auto& bp : intersection_points(P)) {
    if (bp.is_infinite()) continue;
    mpz_ui_pow_ui(pk.get_mpz_t(), P.p(), bp.J.back());
    base *= pk;
  }
  return with_value(MaxExpMode::sharp, base);
}

MaxExpBound maxexp(const Poly& f, MaxExpMode mode) {
  if (f.degree() < 1) throw std::invalid_argument("maxexp needs a polynomial of degree at least 1");
  if (mode == MaxExpMode::sharp) return maxexp_sharp(addpol(f));
  const auto n = static_cast<unsigned long>(f.degree());
  mpz_class base;
  mpz_ui_pow_ui(base.get_mpz_t(), f.ctx()->p(), n * (n + 1) / 2);
  return with_value(MaxExpMode::paper, base);
}

OrderTypeBound order_type_bound(const AdditivePolynomial& P) {
  const auto m = static_cast<unsigned>(intersection_points(P).size());
  const unsigned long n = P.top_index();
  if (m > n * (n + 1) / 2 + 1) throw std::logic_error("intersection count exceeds n(n+1)/2 + 1");
  return {m, "ω^" + std::to_string(m)};
}

OrderTypeBound order_type_bound(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("order bound needs a polynomial of degree at least 1");
  return order_type_bound(addpol(f));
}

}  // namespace hahnroot
