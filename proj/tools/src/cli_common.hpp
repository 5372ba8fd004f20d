#ifndef JETGAL_TOOLS_CLI_COMMON_HPP
#define JETGAL_TOOLS_CLI_COMMON_HPP

#include <string>
#include <vector>

#include "jetgal/expr.hpp"
#include "jetgal/painleve.hpp"

namespace jetgal::cli {

// "x,u,v" -> trimmed name list
std::vector<std::string> split_names(const std::string& text);

// "rho^6=2": register the session extension
void register_extension_spec(const std::string& spec);

struct ChartOptions {
  std::string fiber;     // comma-separated fiber coordinates
  std::string params;    // comma-separated parameters
  std::string extension; // e.g. "rho^6=2"

  Chart build() const;
};

// "expr; expr; expr" aligned with the chart's fiber coordinates
VectorField parse_field_coeffs(const Chart& chart, const std::string& text);

// "name=expr; name=expr" over the given context
std::map<Symbol, RationalFunction> parse_assignments(const expr::ParseContext& ctx,
                                                     const std::string& text);

// "name=rational; ..." for parameter specializations
std::map<Symbol, Scalar> parse_scalar_assignments(const std::string& text);

// a field argument: either "painleve:II" (optionally specialized via `set`)
// or inline coefficients over an explicit chart
struct FieldSource {
  std::string painleve_id; // empty when inline
  ChartOptions chart;
  std::string coeffs;
  std::string set; // parameter values for a catalog field

  VectorField build() const;
};

} // namespace jetgal::cli

#endif
