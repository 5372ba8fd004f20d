#ifndef JETGAL_FIRST_INTEGRALS_HPP
#define JETGAL_FIRST_INTEGRALS_HPP

#include <cstdint>

#include "jetgal/jet_space.hpp"

namespace jetgal {

// degree functional for the candidate monomial basis
enum class DegreeWeighting {
  total,     // every variable has weight 1
  jet_order, // jet variables weigh |alpha|, base variables 1
};

struct FirstIntegralBasis {
  VectorField field;
  std::vector<RationalFunction> integrals;
  unsigned degree_bound = 0;
  std::optional<Polynomial> denominator;
  unsigned jmax = 0;
};

struct VerifyResult {
  bool pass = false;
  RationalFunction residue;
};

// X(H) in canonical form; pass iff it normalizes to zero
VerifyResult verify_first_integral(const VectorField& x, const RationalFunction& h);

// Restrict a field to an invariant coordinate slice {symbol = value}. Errors
// if some defining equation is not killed by the field on the slice.
VectorField restrict_to_slice(const VectorField& x,
                              const std::map<Symbol, RationalFunction>& slice);

// basis of { P : deg P <= D, X(P) = 0 } over the parameter field; always
// contains the constants
FirstIntegralBasis find_polynomial_integrals(
    const VectorField& x, unsigned degree_bound,
    DegreeWeighting weighting = DegreeWeighting::total);

// union over j of { P/Q^j : deg P <= D, Q X(P) - j P X(Q) = 0 }, duplicates
// in the span of lower-j layers removed
FirstIntegralBasis find_fixed_denominator_integrals(
    const VectorField& x, const Polynomial& q, unsigned degree_bound, unsigned jmax,
    DegreeWeighting weighting = DegreeWeighting::total);

// rank of the Jacobian of the integrals at seeded random rational points;
// deterministic given the seed
std::size_t integral_rank(const FirstIntegralBasis& basis, std::uint64_t seed);

// substitute parameter values; DenominatorVanishes if undefined at q
RationalFunction specialize_integral(const RationalFunction& h,
                                     const std::map<Symbol, Scalar>& q);

// true iff h lies in the span of basis over the parameter field
bool in_span(const std::vector<RationalFunction>& basis, const RationalFunction& h,
             const std::vector<Symbol>& main_vars);

} // namespace jetgal

#endif
