#ifndef JETGAL_TESTS_TEST_UTIL_HPP
#define JETGAL_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "jetgal/polynomial.hpp"
#include "jetgal/rational_function.hpp"

namespace jetgal::testutil {

// deterministic generator for property-style tests
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { // inclusive
    return lo + (long)(next() % (std::uint64_t)(hi - lo + 1));
  }
};

// random polynomial of total degree <= deg over the given symbols, with
// small integer coefficients, at most `terms` terms
inline Polynomial random_poly(Rng& rng, const std::vector<Symbol>& syms, unsigned deg,
                              unsigned terms = 4) {
  Polynomial p;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = (unsigned)rng.range(0, (long)deg);
    for (const auto& s : syms) {
      if (budget == 0) break;
      unsigned e = (unsigned)rng.range(0, (long)budget);
      if (e > 0) m = Monomial::mul(m, Monomial(s, e));
      budget -= e;
    }
    long c = rng.range(-5, 5);
    if (c != 0) p += Polynomial::term(Scalar(c), m);
  }
  return p;
}

inline RationalFunction random_rf(Rng& rng, const std::vector<Symbol>& syms, unsigned deg) {
  Polynomial num = random_poly(rng, syms, deg);
  Polynomial den;
  while (den.is_zero()) den = random_poly(rng, syms, deg > 1 ? deg - 1 : 1, 2);
  return RationalFunction(num, den);
}

} // namespace jetgal::testutil

#endif
