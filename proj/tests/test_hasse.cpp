#include <random>

#include "doctest.h"
#include "hahnroot/corpus.hpp"
#include "hahnroot/expr.hpp"
#include "hahnroot/hasse.hpp"

using namespace hahnroot;

namespace {

Exponent q(long n, unsigned long d = 1) { return make_exponent(n, d); }

RatFun mono(const FieldPtr& f, std::int64_t c, const Exponent& e) { return RatFun::monomial(FF(f, c), e); }

/// f(X + l) computed by repeated multiplication, not through derivatives.
Poly shifted(const Poly& f, const RatFun& l) {
  const Poly x_plus_l = Poly::X(f.ctx()) + Poly::constant(l);
  Poly acc(f.ctx());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x_plus_l + Poly::constant(f.coeffs()[i]);
  return acc;
}

}  // namespace

TEST_CASE("binomials mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned long n = 0; n < 40; ++n) {
      mpz_class c = 1;
      for (unsigned long k = 0; k <= n; ++k) {
        mpz_class exact;
        mpz_bin_uiui(exact.get_mpz_t(), n, k);
        CHECK(binomial_mod(n, k, p) == mpz_fdiv_ui(exact.get_mpz_t(), p));
      }
    }
  }
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 40);
  CHECK(binomial_mod(big, big, 3) == 1);
  CHECK(binomial_mod(big, 1, 3) == 0);
}

TEST_CASE("hasse_derivative") {
  auto f = parse_polynomial("X^3 - X^2 - 1/t", 3);
  CHECK(hasse_derivative(f, 0) == f);
  CHECK(hasse_derivative(f, 2) == parse_polynomial("-1", 3));
  CHECK(hasse_derivative(f, 3) == parse_polynomial("1", 3));
  CHECK(hasse_derivative(f, 4).is_zero());
  CHECK(hasse_derivative(f, 1) == parse_polynomial("X", 3));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto xp = Poly::monomial(RatFun(FF::one(FieldCtx::prime(p))), p);
    CHECK(hasse_derivative(xp, 1).is_zero());
    CHECK(hasse_derivative(xp, p) == parse_polynomial("1", p));
  }
}

TEST_CASE("taylor_coeffs") {
  auto f3 = FieldCtx::prime(3);
  auto c = taylor_coeffs(parse_polynomial("X^2", 3), RatFun(FF(f3, 1)));
  REQUIRE(c.size() == 3);
  CHECK(c[0] == RatFun(FF(f3, 1)));
  CHECK(c[1] == RatFun(FF(f3, 2)));
  CHECK(c[2] == RatFun(FF(f3, 1)));

  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto fp = FieldCtx::prime(p);
    auto xp = Poly::monomial(RatFun(FF::one(fp)), p);
    RatFun l = RatFun(TermPoly(fp, {{q(0), FF(fp, 1)}, {q(1), FF(fp, 1)}}), TermPoly::monomial(FF(fp, 1), q(2)));
    auto tc = taylor_coeffs(xp, l);
    REQUIRE(tc.size() == p + 1);
    CHECK(tc[0] == l.pow(p));
    for (std::uint32_t k = 1; k < p; ++k) CHECK(tc[k].is_zero());
    CHECK(tc[p].is_one());
  }

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    auto fp = FieldCtx::prime(p);
    Poly f = random_polynomial(p, 4, rng);
    RatFun l = random_coefficient(fp, rng, false);
    auto tc = taylor_coeffs(f, l);
    const Poly x_minus_l = Poly::X(fp) - Poly::constant(l);
    Poly rebuilt(fp), power = Poly::constant(RatFun(FF::one(fp)));
    for (const auto& ck : tc) {
      rebuilt += power * ck;
      power = power * x_minus_l;
    }
    CHECK(rebuilt == f);
    // Second route: coefficients of f(X + l).
    Poly s = shifted(f, l);
    for (std::size_t k = 0; k < tc.size(); ++k) CHECK(s.coeff(k) == tc[k]);
  }
}

TEST_CASE("evaluate") {
  auto f3 = FieldCtx::prime(3);
  auto f = parse_polynomial("X^3 - X^2 - 1/t", 3);
  CHECK(evaluate(f, mono(f3, 1, q(-1, 3))) == mono(f3, 2, q(-2, 3)));
  CHECK(evaluate(f, RatFun(f3)) == mono(f3, -1, q(-1)));
  CHECK(evaluate(f, HahnSeries(TermPoly::monomial(FF(f3, 1), q(-1, 3)))) == mono(f3, 2, q(-2, 3)));

  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto fp = FieldCtx::prime(p);
    auto as = parse_polynomial("X^" + std::to_string(p) + " - X - 1/t", p);
    TermPoly w(fp);
    mpz_class pn = 1;
    for (int n = 1; n <= 6; ++n) {
      pn *= p;
      w += TermPoly::monomial(FF::one(fp), Exponent(mpz_class(-1), pn));
      CHECK(evaluate(as, HahnSeries(w)) == RatFun::monomial(FF(fp, -1), Exponent(mpz_class(-1), pn)));
    }
  }

  // Evaluation at a point of an extension field.
  auto f9 = FieldCtx::extension(3, 2);
  auto s = FF::generator(f9);
  auto g = parse_polynomial("X^2 + 1", 3);
  CHECK(evaluate(g, RatFun(s)).is_zero());
}

TEST_CASE("newton_data and gamma_J") {
  auto f3 = FieldCtx::prime(3);
  auto f = parse_polynomial("X^3 - X^2 - 1/t", 3);
  auto w = HahnSeries(TermPoly(f3, {{q(-1, 3), FF(f3, 1)}, {q(-2, 9), FF(f3, 1)}}));
  auto lines = newton_data(f, w);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].i == 1);
  CHECK(lines[0].rho == q(-1, 3));
  CHECK(lines[0].b == FF(f3, 1));
  CHECK(lines[1].i == 2);
  CHECK(lines[1].rho == q(0));
  CHECK(lines[1].b == FF(f3, -1));
  CHECK(lines[2].i == 3);
  CHECK(lines[2].rho == q(0));
  CHECK(lines[2].b == FF(f3, 1));

  auto g1 = gamma_J(lines, q(-1, 6));
  CHECK(*g1.gamma == q(-1, 2));
  CHECK(g1.J == std::vector<unsigned>{1, 3});
  auto g2 = gamma_J(lines, q(0));
  CHECK(*g2.gamma == q(-1, 3));
  CHECK(g2.J == std::vector<unsigned>{1});
  auto g3 = gamma_J(lines, std::nullopt);
  CHECK_FALSE(g3.gamma.has_value());
  CHECK(g3.J == std::vector<unsigned>{1, 2, 3});
  std::vector<NewtonLine> single{lines[1]};
  for (long n = -5; n <= 5; ++n) CHECK(gamma_J(single, q(n, 7)).J == std::vector<unsigned>{2});

  auto lx = newton_data(parse_polynomial("X^2 - t", 3), HahnSeries(f3));
  REQUIRE(lx.size() == 1);
  CHECK(lx[0].i == 2);

  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto fp = FieldCtx::prime(p);
    auto la = newton_data(parse_polynomial("X^" + std::to_string(p) + " - X - 1/t", p), HahnSeries(fp));
    REQUIRE(la.size() == 2);
    CHECK(la[0].i == 1);
    CHECK(la[0].rho == 0);
    CHECK(la[0].b == FF(fp, -1));
    CHECK(la[1].i == p);
    CHECK(la[1].rho == 0);
    CHECK(la[1].b == FF(fp, 1));
  }
  CHECK(newton_data(parse_polynomial("t", 3), HahnSeries(f3)).empty());
}

TEST_CASE("newton lines against a shifted polynomial and monomial substitution") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    auto fp = FieldCtx::prime(p);
    Poly f = random_polynomial(p, 4, rng);
    std::vector<Term> ts;
    for (int j = 0; j < 3; ++j) {
      ts.push_back({make_exponent(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4), FF(fp, 1 + static_cast<long>(rng() % (p - 1)))});
    }
    HahnSeries w{TermPoly(fp, ts)};
    auto lines = newton_data(f, w);
    Poly s = shifted(f, w.to_ratfun());
    std::size_t li = 0;
    for (int i = 1; i <= f.degree(); ++i) {
      auto lt = leading_term(s.coeff(static_cast<std::size_t>(i)));
      if (!lt) continue;
      REQUIRE(li < lines.size());
      CHECK(lines[li].i == static_cast<unsigned>(i));
      CHECK(lines[li].rho == lt->v);
      CHECK(lines[li].b == lt->c);
      // v(D^(i)f(w) * y^i) = rho + i*r for y of valuation r.
      const Exponent r = make_exponent(static_cast<long>(rng() % 11) - 5, 1 + rng() % 6);
      RatFun y = RatFun::monomial(FF(fp, 1 + static_cast<long>(rng() % (p - 1))), r);
      CHECK(*valuation(s.coeff(static_cast<std::size_t>(i)) * y.pow(i)) == lines[li].rho + Exponent(i) * r);
      ++li;
    }
    CHECK(li == lines.size());
  }
}

TEST_CASE("polynomial division") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    Poly a = random_polynomial(p, 4, rng), b = random_polynomial(p, 3, rng);
    auto [qq, r] = (a * b + a).divmod(b);
    CHECK(qq * b + r == a * b + a);
    CHECK(r.degree() < b.degree());
    auto [q2, r2] = (a * b).divmod(b);
    CHECK(q2 == a);
    CHECK(r2.is_zero());
  }
}
