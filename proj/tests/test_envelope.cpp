#include <random>
#include <set>

#include "doctest.h"
#include "hahnroot/corpus.hpp"
#include "hahnroot/envelope.hpp"
#include "hahnroot/expr.hpp"

using namespace hahnroot;

namespace {

Exponent q(long n, unsigned long d = 1) { return make_exponent(n, d); }

AdditivePolynomial additive(std::uint32_t p, std::initializer_list<std::pair<unsigned, RatFun>> cs) {
  std::map<unsigned, RatFun> m;
  for (const auto& [i, c] : cs) m.emplace(i, c);
  return AdditivePolynomial(FieldCtx::prime(p), std::move(m));
}

/// Every pairwise crossing, kept when the minimum is attained at least twice.
std::vector<Breakpoint> brute_force(const AdditivePolynomial& P) {
  auto lines = envelope_lines(P);
  std::set<Exponent> rs;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      Exponent r = (lines[b].intercept - lines[a].intercept) / Exponent(lines[a].slope - lines[b].slope);
      r.canonicalize();
      rs.insert(r);
    }
  }
  std::vector<Breakpoint> out;
  for (const auto& r : rs) {
    auto J = argmin_lines(lines, r);
    if (J.size() >= 2) out.push_back({r, J});
  }
  if (lines.size() >= 2) out.push_back({std::nullopt, P.support()});
  return out;
}

}  // namespace

TEST_CASE("intersection_points examples") {
  auto f3 = FieldCtx::prime(3);
  auto one = RatFun(FF::one(f3));
  auto pts = intersection_points(additive(3, {{0, -one}, {1, one}}));
  REQUIRE(pts.size() == 2);
  CHECK(*pts[0].r == q(0));
  CHECK(pts[0].J == std::vector<unsigned>{0, 1});
  CHECK(pts[1].is_infinite());
  CHECK(pts[1].J == std::vector<unsigned>{0, 1});

  auto t = RatFun::monomial(FF::one(f3), q(1));
  auto pts2 = intersection_points(addpol(parse_polynomial("X^2 - t", 3)));
  REQUIRE(pts2.size() == 2);
  CHECK(*pts2[0].r == q(1, 2));
  CHECK(pts2[1].is_infinite());

  for (std::uint32_t p : {2u, 3u, 5u}) {
    CHECK(intersection_points(additive(p, {{1, RatFun(FF::one(FieldCtx::prime(p)))}})).empty());
  }

  // Three lines 0 + r, 1 + 3r, 3 + 9r. Pairwise crossings: -1/2, -1/3,
  // -3/8. The steepest line stays lowest until it meets the flattest at
  // -3/8, so the other two crossings lie above the envelope.
  auto t3 = RatFun::monomial(FF::one(f3), q(3));
  auto pts3 = intersection_points(additive(3, {{0, one}, {1, t}, {2, t3}}));
  REQUIRE(pts3.size() == 2);
  CHECK(*pts3[0].r == q(-3, 8));
  CHECK(pts3[0].J == std::vector<unsigned>{0, 2});

  // Three-way tie: 0 + r, 2 + 3r, 8 + 9r all meet at -1.
  auto t2 = RatFun::monomial(FF::one(f3), q(2));
  auto t8 = RatFun::monomial(FF::one(f3), q(8));
  auto pts4 = intersection_points(additive(3, {{0, one}, {1, t2}, {2, t8}}));
  REQUIRE(pts4.size() == 2);
  CHECK(*pts4[0].r == q(-1));
  CHECK(pts4[0].J == std::vector<unsigned>{0, 1, 2});
}

TEST_CASE("sweep agrees with the pairwise oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint32_t p = std::array{2u, 3u, 5u}[trial % 3];
    auto fp = FieldCtx::prime(p);
    std::map<unsigned, RatFun> cs;
    const unsigned top = 1 + static_cast<unsigned>(rng() % 5);
    for (unsigned i = 0; i <= top; ++i) {
      if (i < top && rng() % 3 == 0) continue;
      cs.emplace(i, RatFun::monomial(FF::one(fp), q(static_cast<long>(rng() % 13) - 6)));
    }
    AdditivePolynomial P(fp, cs);
    auto got = intersection_points(P);
    auto want = brute_force(P);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].r == want[k].r);
      CHECK(got[k].J == want[k].J);
    }
    // Finite points: at most |I_P| - 1, ascending, each a kink of a concave
    // envelope (slopes of the minimum strictly decrease across it).
    const auto n_finite = got.size() - (got.empty() ? 0 : 1);
    CHECK(n_finite + 1 <= std::max<std::size_t>(P.support().size(), 1));
    const auto lines = envelope_lines(P);
    for (std::size_t k = 0; k + 1 < n_finite; ++k) CHECK(*got[k].r < *got[k + 1].r);
    for (std::size_t k = 0; k < n_finite; ++k) {
      const auto left = argmin_lines(lines, *got[k].r - q(1, 1000000));
      const auto right = argmin_lines(lines, *got[k].r + q(1, 1000000));
      CHECK(left.size() == 1);
      CHECK(right.size() == 1);
      CHECK(left[0] > right[0]);
    }
    const unsigned long n = P.top_index();
    CHECK(got.size() <= n * (n + 1) / 2 + 1);
  }
}

TEST_CASE("maxram") {
  CHECK(maxram(parse_polynomial("X^2 - t", 3)) == 2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CHECK(maxram(parse_polynomial("X^" + std::to_string(p) + " - X - 1/t", p)) == 1);
  }
  auto ex = parse_polynomial("X^3 - X^2 - 1/t", 3);
  CHECK(maxram(ex) % 2 == 0);
  bool has_minus_sixth = false;
  for (const auto& bp : intersection_points(addpol(ex))) has_minus_sixth |= bp.r == std::optional<Exponent>(q(-1, 6));
  CHECK(has_minus_sixth);
  CHECK(maxram(parse_polynomial("X", 3)) == 1);
  for (const auto& e : corpus(555, 50)) {
    auto m = maxram(e.f);
    CHECK(m >= 1);
    CHECK(mpz_fdiv_ui(m.get_mpz_t(), e.p) != 0);
  }
}

TEST_CASE("maxexp") {
  auto paper = maxexp(parse_polynomial("X^2 + t*X + 1", 2), MaxExpMode::paper);
  CHECK(paper.base == 8);
  CHECK(paper.value == std::optional<mpz_class>(40320));
  // addpol(X^p - X - 1/t) = t^(p-1) X^(p^2) - (t^(p-1) + 1) X^p + X by hand
  // reduction. Its lines 0 + r, 0 + p r, (p-1) + p^2 r have finite points
  // -1/p (J = {1, 2}) and 0 (J = {0, 1}), so D' = p^2 * p.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = parse_polynomial("X^" + std::to_string(p) + " - X - 1/t", p);
    auto pts = intersection_points(addpol(f));
    REQUIRE(pts.size() == 3);
    CHECK(*pts[0].r == q(-1, p));
    CHECK(pts[0].J == std::vector<unsigned>{1, 2});
    CHECK(*pts[1].r == q(0));
    CHECK(pts[1].J == std::vector<unsigned>{0, 1});
    auto sharp = maxexp(f, MaxExpMode::sharp);
    CHECK(sharp.base == p * p * p);
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), p * p * p);
    CHECK(sharp.value == std::optional<mpz_class>(fac));
  }
  auto s2 = maxexp(parse_polynomial("X^2 - t", 3), MaxExpMode::sharp);
  CHECK(s2.base == 3);
  CHECK(*s2.value == 6);
  auto p2 = maxexp(parse_polynomial("X^2 - t", 3), MaxExpMode::paper);
  CHECK(p2.base == 27);
  CHECK(p2.value->get_str() == "10888869450418352160768000000");
  for (const auto& e : corpus(556, 50)) {
    auto a = maxexp(e.f, MaxExpMode::sharp), b = maxexp(e.f, MaxExpMode::paper);
    CHECK(a.base <= b.base);
  }
  auto huge = maxexp(parse_polynomial("X^4 + t", 5), MaxExpMode::paper);
  CHECK(huge.base == 9765625);
  CHECK_FALSE(huge.value.has_value());
}

TEST_CASE("order_type_bound") {
  auto b = order_type_bound(parse_polynomial("X^2 - t", 3));
  CHECK(b.m == 2);
  CHECK(b.label == "ω^2");
  auto single = order_type_bound(parse_polynomial("X", 3));
  CHECK(single.m == 0);
  CHECK(single.label == "ω^0");
  for (const auto& e : corpus(557, 50)) {
    if (e.f.degree() != 3) continue;
    CHECK(order_type_bound(e.f).m <= 7);
  }
}
