#include <random>

#include "doctest.h"
#include "hahnroot/corpus.hpp"
#include "hahnroot/expr.hpp"

using namespace hahnroot;

TEST_CASE("parse examples") {
  auto f3 = FieldCtx::prime(3);
  auto f = parse_polynomial("X^3 - X^2 - 1/t", 3);
  REQUIRE(f.degree() == 3);
  CHECK(f.coeff(0) == RatFun::monomial(FF(f3, -1), make_exponent(-1)));
  CHECK(f.coeff(1).is_zero());
  CHECK(f.coeff(2) == RatFun(FF(f3, -1)));
  CHECK(f.coeff(3).is_one());
  CHECK(format_polynomial(f) == "X^3 - X^2 - 1/t");

  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto x = parse_polynomial("X", p);
    CHECK(x == Poly::X(FieldCtx::prime(p)));
    CHECK(format_polynomial(x) == "X");
  }

  auto f5 = FieldCtx::prime(5);
  auto g = parse_polynomial("(t^2+1)/(t^3)*X - t", 5);
  REQUIRE(g.degree() == 1);
  RatFun c1(TermPoly(f5, {{make_exponent(2), FF(f5, 1)}, {make_exponent(0), FF(f5, 1)}}),
            TermPoly::monomial(FF(f5, 1), make_exponent(3)));
  CHECK(g.coeff(1) == c1);
  CHECK(g.coeff(0) == RatFun::monomial(FF(f5, -1), make_exponent(1)));
  CHECK(format_polynomial(g) == "(t^2 + 1)/(t^3)*X - t");

  CHECK(parse_polynomial("  7*X ^ 2 + 10 ", 5) == parse_polynomial("2X^2", 5));
  CHECK(parse_polynomial("3t(t+1)X", 5) == parse_polynomial("3*t^2*X + 3*t*X", 5));
  CHECK(format_polynomial(parse_polynomial("X^3 - t*X", 3)) == "X^3 - t*X");
  CHECK(format_polynomial(parse_polynomial("2*X^2 + 3", 5)) == "2*X^2 - 2");
  CHECK(format_polynomial(parse_polynomial("-(t+1)", 3)) == "-(t + 1)");
  CHECK(format_polynomial(parse_polynomial("X - (t^2+1)", 3)) == "X - (t^2 + 1)");
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const std::string& text, std::uint32_t p) -> long {
    try {
      parse_polynomial(text, p);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos_of("X^2 + y", 3) == 6);
  CHECK(pos_of("X / (t - t)", 3) == 2);
  CHECK(pos_of("1/X", 3) == 1);
  CHECK(pos_of("X^", 3) == 2);
  CHECK(pos_of("(X + 1", 3) == 6);
  CHECK(pos_of("", 3) == 0);
  CHECK(pos_of("X 2", 3) == 2);
  CHECK(pos_of("3/3", 3) == 1);
  CHECK_THROWS_AS(parse_polynomial("X", 4), std::invalid_argument);
}

TEST_CASE("print/parse round trip on the corpus") {
  for (const auto& e : corpus(20260101, 200)) {
    const std::string text = format_polynomial(e.f);
    CAPTURE(text);
    CHECK(parse_polynomial(text, e.p) == e.f);
    CHECK(format_polynomial(parse_polynomial(text, e.p)) == text);
  }
}
