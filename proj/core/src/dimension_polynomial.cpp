#include "jetgal/dimension_polynomial.hpp"

#include <set>

#include "jetgal/errors.hpp"

namespace jetgal {

namespace {

Rational binom_rational(long k, long i) {
  Rational r(1);
  for (long j = 1; j <= i; ++j) r *= Rational(k + j, j);
  r.canonicalize();
  return r;
}

} // namespace

long DimensionPolynomial::evaluate(long k) const {
  Rational acc(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc += Rational(coeffs[i]) * binom_rational(k, (long)i);
  acc.canonicalize();
  return (long)acc.get_num().get_si();
}

DimensionPolynomial fit_dimension_polynomial(
    const std::vector<std::pair<long, long>>& samples, unsigned max_type) {
  if (samples.size() < 2)
    raise(errc::invalid_argument, "need at least two samples");
  std::set<long> ks;
  for (const auto& [k, dim] : samples) {
    if (!ks.insert(k).second)
      raise(errc::invalid_argument, "sample orders must be distinct");
  }

  std::size_t cap = std::min<std::size_t>(max_type, samples.size() - 2);
  for (std::size_t ell = 0; ell <= cap; ++ell) {
    // solve the (ell+1)-unknown interpolation on the first ell+1 samples
    std::size_t n = ell + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c)
        m[r][c] = binom_rational(samples[r].first, (long)c);
      m[r][n] = Rational(samples[r].second);
    }
    // Gaussian elimination
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) { singular = true; break; }
      std::swap(m[piv], m[col]);
      Rational inv = 1 / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    if (singular) continue; // binomial basis is unisolvent; defensive only

    std::vector<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = m[i][n];
      a[i].canonicalize();
    }
    // must reproduce every remaining sample
    bool fits = true;
    for (std::size_t r = n; r < samples.size() && fits; ++r) {
      Rational acc(0);
      for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * binom_rational(samples[r].first, (long)i);
      fits = acc == Rational(samples[r].second);
    }
    if (!fits) continue;

    for (const auto& c : a)
      if (c.get_den() != 1)
        raise(errc::non_integer_coefficients,
              "the minimal fitting polynomial has non-integer coefficients");
    DimensionPolynomial p;
    for (const auto& c : a) p.coeffs.push_back((long)c.get_num().get_si());
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    p.type = (unsigned)(p.coeffs.size() - 1);
    return p;
  }
  raise(errc::no_polynomial_fit, "no binomial-basis polynomial fits the samples");
}

} // namespace jetgal
