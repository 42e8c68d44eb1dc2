#include <random>

#include "doctest.h"
#include "hahnroot/hahn.hpp"

using namespace hahnroot;

namespace {

Exponent q(long n, unsigned long d = 1) { return make_exponent(n, d); }

HahnSeries series(const FieldPtr& f, std::initializer_list<std::pair<Exponent, std::int64_t>> ts) {
  std::vector<Term> v;
  for (const auto& [e, c] : ts) v.push_back({e, FF(f, c)});
  return HahnSeries(TermPoly(f, v));
}

HahnSeries random_series(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Term> v;
  const int n = static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> c(f->k());
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % f->p());
    const long den = std::array{1L, 2L, 3L, 9L}[rng() % 4];
    v.push_back({make_exponent(static_cast<long>(rng() % 13) - 6, den), FF::from_coords(f, c)});
  }
  return HahnSeries(TermPoly(f, v));
}

}  // namespace

TEST_CASE("truncate") {
  auto f3 = FieldCtx::prime(3);
  auto x = series(f3, {{q(-1, 3), 1}, {q(-2, 9), 1}, {q(1, 2), 2}});
  CHECK(truncate(x, q(-2, 9)) == series(f3, {{q(-1, 3), 1}}));
  CHECK(truncate(x, q(-2, 9), true) == series(f3, {{q(-1, 3), 1}, {q(-2, 9), 1}}));
  CHECK(truncate(x, q(-1)).is_zero());
  CHECK(truncate(x, q(-1)).is_exact());
  CHECK(truncate(truncate(x, q(0)), q(0)) == truncate(x, q(0)));

  auto prefix = HahnSeries::known_below(TermPoly::monomial(FF(f3, 1), q(-1, 3)), q(-1, 6));
  CHECK(truncate(prefix, q(-1, 4)).is_exact());
  CHECK(truncate(prefix, q(1)).known_below() == std::optional<Exponent>(q(-1, 6)));
  CHECK(prefix.str() == "t^(-1/3) + O(t^(-1/6))");
  CHECK_THROWS_AS(HahnSeries::known_below(TermPoly::monomial(FF(f3, 1), q(0)), q(0)), std::invalid_argument);
}

TEST_CASE("is_approximation") {
  auto f3 = FieldCtx::prime(3);
  auto x = series(f3, {{q(-1, 3), 1}, {q(-2, 9), 1}, {q(1, 2), 2}});
  CHECK(is_approximation(series(f3, {{q(-1, 3), 1}}), series(f3, {{q(-1, 3), 1}, {q(-2, 9), 1}})));
  CHECK_FALSE(is_approximation(x, x));
  CHECK_FALSE(is_approximation(series(f3, {{q(-1, 3), 1}, {q(1, 2), 1}}), x));
  CHECK(is_approximation(HahnSeries(f3), x));
  CHECK_THROWS(is_approximation(HahnSeries::known_below(TermPoly(f3), q(0)), x));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto y = random_series(f3, rng);
    auto r = make_exponent(static_cast<long>(rng() % 13) - 6, 1 + rng() % 9);
    auto tr = truncate(y, r, rng() % 2);
    if (!(tr == y)) CHECK(is_approximation(tr, y));
  }
}

TEST_CASE("ramifies_at") {
  std::vector<Exponent> s1{q(-1, 3), q(-2, 9)};
  CHECK(ramifies_at(s1, q(-1, 6), 2));
  std::vector<Exponent> s2{q(-1), q(-1, 2)};
  for (unsigned long qq : {2ul, 3ul, 5ul}) CHECK_FALSE(ramifies_at(s2, q(3), qq));
  std::vector<Exponent> s3{q(-1, 3)};
  CHECK(ramifies_at(s3, q(-1, 9), 3));
  CHECK_FALSE(ramifies_at(s3, q(-1, 6), 3));
  // Elements above r are ignored.
  std::vector<Exponent> s4{q(1, 4)};
  CHECK(ramifies_at(s4, q(-1, 2), 2));
  CHECK_THROWS(ramifies_at(s1, q(1, 2), 4));

  // Once a support element below r has q-exponent >= K, every later r with
  // that K fails too.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<Exponent> supp;
    for (int j = 0; j < 4; ++j) supp.push_back(make_exponent(static_cast<long>(rng() % 21) - 10, 1 + rng() % 12));
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
    const Exponent r1 = make_exponent(static_cast<long>(rng() % 21) - 10, 1 + rng() % 12);
    const Exponent r2 = r1 + make_exponent(static_cast<long>(rng() % 5), 1);
    for (unsigned long qq : {2ul, 3ul}) {
      if (q_adic_order(r1.get_den(), qq) != q_adic_order(r2.get_den(), qq)) continue;
      if (q_adic_order(r1.get_den(), qq) == 0) continue;
      bool blocked = false;
      for (const auto& s : supp) blocked |= s < r1 && q_adic_order(s.get_den(), qq) >= q_adic_order(r1.get_den(), qq);
      if (blocked) CHECK_FALSE(ramifies_at(supp, r2, qq));
    }
  }
}

TEST_CASE("expands_at") {
  auto f3 = FieldCtx::prime(3);
  auto f9 = FieldCtx::extension(3, 2);
  auto s = FF::generator(f9);
  REQUIRE(s * s == FF(f9, 2));
  std::vector<FF> prefix{FF(f9, 1), FF(f9, 1), FF(f9, 2)};
  CHECK(expands_at(prefix, s));
  CHECK(expands_at(prefix, -s));
  CHECK_FALSE(expands_at(prefix, FF(f9, 2)));
  std::vector<FF> none;
  CHECK_FALSE(expands_at(none, FF(f3, 1)));
  CHECK(expands_at(none, s));
  std::vector<FF> with_s{s};
  CHECK_FALSE(expands_at(with_s, s + FF(f9, 1)));
}

TEST_CASE("series arithmetic agrees with rational-function arithmetic") {
  std::mt19937_64 rng(77);
  for (auto f : {FieldCtx::prime(3), FieldCtx::extension(2, 2)}) {
    for (int i = 0; i < 60; ++i) {
      auto a = random_series(f, rng), b = random_series(f, rng);
      CHECK((a + b).to_ratfun() == a.to_ratfun() + b.to_ratfun());
      CHECK((a - b).to_ratfun() == a.to_ratfun() - b.to_ratfun());
      CHECK((a * b).to_ratfun() == a.to_ratfun() * b.to_ratfun());
    }
  }
  auto f3 = FieldCtx::prime(3);
  auto a = HahnSeries::known_below(TermPoly::monomial(FF(f3, 1), q(-1)), q(0));
  auto b = series(f3, {{q(-1, 2), 1}, {q(3), 1}});
  auto ab = a * b;
  REQUIRE(ab.known_below());
  CHECK(*ab.known_below() == q(-1, 2));
  CHECK(ab.terms() == TermPoly::monomial(FF(f3, 1), q(-3, 2)));
  CHECK_THROWS(a.to_ratfun());
}

TEST_CASE("json round trip") {
  auto f9 = FieldCtx::extension(3, 2);
  auto s = FF::generator(f9);
  std::vector<Term> ts{{q(-1, 3), FF(f9, 1)}, {q(-1, 6), s * FF(f9, 2) + FF(f9, 1)}};
  auto x = HahnSeries::known_below(TermPoly(f9, ts), q(0));
  auto j = to_json(x);
  CHECK(j["field"] == "F_3[s]/(s^2+1)");
  CHECK(j["terms"][0] == nlohmann::json{{"exp", "-1/3"}, {"coeff", "1"}});
  CHECK(j["precision"]["known_below"] == "0");
  auto back = series_from_json(j);
  CHECK(back.ctx()->same_as(*f9));
  CHECK(back == x);
  auto e = HahnSeries(TermPoly::monomial(FF(FieldCtx::prime(5), 3), q(2)));
  CHECK(series_from_json(to_json(e)) == e);
  CHECK(to_json(e)["precision"] == "exact");
}
