#ifndef JETGAL_ERRORS_HPP
#define JETGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetgal {

enum class errc {
  division_by_zero,
  not_divisible,
  zero_divisor,
  unknown_symbol,
  denominator_vanishes,
  singular,
  chart_mismatch,
  degree_overflow,
  degree_mismatch,
  singular_jacobian,
  zero_form,
  zero_denominator,
  rank_out_of_range,
  no_valid_point,
  no_polynomial_fit,
  non_integer_coefficients,
  no_solution,
  pole_at_zero,
  arity_mismatch,
  invariant_violated,
  syntax_error,
  invalid_argument,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
public:
  error(errc kind, std::string what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& what) {
  throw error(kind, what);
}

} // namespace jetgal

#endif
