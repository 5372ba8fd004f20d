#include "jetgal/errors.hpp"

namespace jetgal {

const char* errc_name(errc k) {
  switch (k) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_divisible: return "NotDivisible";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::singular: return "Singular";
    case errc::chart_mismatch: return "ChartMismatch";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::singular_jacobian: return "SingularJacobian";
    case errc::zero_form: return "ZeroForm";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::no_valid_point: return "NoValidPoint";
    case errc::no_polynomial_fit: return "NoPolynomialFit";
    case errc::non_integer_coefficients: return "NonIntegerCoefficients";
    case errc::no_solution: return "NoSolution";
    case errc::pole_at_zero: return "PoleAtZero";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::syntax_error: return "SyntaxError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

} // namespace jetgal
