#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hahnroot/hasse.hpp"

namespace hahnroot {

/// Random element of F_p(t): numerator of t-degree <= 2 over a denominator
/// that is 1, a power of t, or a random monic polynomial of degree <= 2.
RatFun random_coefficient(const FieldPtr& fp, std::mt19937_64& rng, bool nonzero);

/// Random f in F_p(t)[X] with 1 <= deg f <= max_degree.
Poly random_polynomial(std::uint32_t p, unsigned max_degree, std::mt19937_64& rng);

struct CorpusEntry {
  std::uint32_t p;
  Poly f;
};

/// The test corpus: `count` polynomials of degree <= 4 over p = 2 and p = 3
/// (alternating), reproducible from the seed.
std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count);

}  // namespace hahnroot
