#ifndef JETGAL_DIMENSION_POLYNOMIAL_HPP
#define JETGAL_DIMENSION_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "jetgal/scalar.hpp"

namespace jetgal {

// P(k) = sum_i a_i binom(k+i, i) with integer a_i; the type is the degree.
struct DimensionPolynomial {
  std::vector<long> coeffs; // a_0 .. a_type; a_type != 0 unless zero
  unsigned type = 0;

  long evaluate(long k) const;
  bool is_zero() const { return coeffs.empty() || (coeffs.size() == 1 && coeffs[0] == 0); }
};

// Minimal-degree exact fit through all samples (k, dim), k distinct and >= the
// caller's stabilization order. Candidate degrees run up to
// min(max_type, #samples - 2), so every accepted fit is confirmed by at least
// one held-out sample. NoPolynomialFit if nothing in that range matches;
// NonIntegerCoefficients if the minimal fit is not integral.
DimensionPolynomial fit_dimension_polynomial(
    const std::vector<std::pair<long, long>>& samples,
    unsigned max_type = 1000000);

} // namespace jetgal

#endif
