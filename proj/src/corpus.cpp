#include "hahnroot/corpus.hpp"

namespace hahnroot {

namespace {

TermPoly random_tpoly(const FieldPtr& fp, std::mt19937_64& rng, unsigned max_degree, bool monic) {
  std::vector<Term> ts;
  const unsigned d = static_cast<unsigned>(rng() % (max_degree + 1));
  for (unsigned i = 0; i <= d; ++i) {
    const auto c = (monic && i == d) ? 1 : static_cast<std::int64_t>(rng() % fp->p());
    ts.push_back({Exponent(static_cast<long>(i)), FF(fp, c)});
  }
  return TermPoly(fp, std::move(ts));
}

}  // namespace

RatFun random_coefficient(const FieldPtr& fp, std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    TermPoly num = random_tpoly(fp, rng, 2, false);
    if (nonzero && num.is_zero()) continue;
    TermPoly den = TermPoly::constant(FF::one(fp));
    switch (rng() % 4) {
      case 0:
      case 1:
        break;
      case 2:
        den = TermPoly::monomial(FF::one(fp), Exponent(static_cast<long>(1 + rng() % 2)));
        break;
      default:
        den = random_tpoly(fp, rng, 2, true);
        break;
    }
    return RatFun(std::move(num), std::move(den));
  }
}

Poly random_polynomial(std::uint32_t p, unsigned max_degree, std::mt19937_64& rng) {
  auto fp = FieldCtx::prime(p);
  const unsigned n = 1 + static_cast<unsigned>(rng() % max_degree);
  std::vector<RatFun> cs;
  for (unsigned i = 0; i < n; ++i) cs.push_back(rng() % 3 == 0 ? RatFun(fp) : random_coefficient(fp, rng, false));
  cs.push_back(rng() % 2 ? RatFun(FF::one(fp)) : random_coefficient(fp, rng, true));
  return Poly(fp, std::move(cs));
}

std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t p = i % 2 == 0 ? 2 : 3;
    out.push_back({p, random_polynomial(p, 4, rng)});
  }
  return out;
}

}  // namespace hahnroot
