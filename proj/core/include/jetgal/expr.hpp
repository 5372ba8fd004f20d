#ifndef JETGAL_EXPR_HPP
#define JETGAL_EXPR_HPP

#include <string>
#include <variant>

#include "jetgal/differential_form.hpp"
#include "jetgal/jet_space.hpp"

namespace jetgal::expr {

// Surface syntax, shared by the CLI, the job files, and the catalog fixture:
//   IDENT  [A-Za-z_][A-Za-z0-9_]*      INTEGER  [0-9]+
//   operators  + - * / ^ ( ) , [ ]  and the wedge  /\
//   jet variables  IDENT '[' INT (',' INT)* ']'
//   form atoms  d(IDENT)
// precedence: ^  >  unary -  >  * /  >  + -  >  /\ ; ^ is right-associative
// and takes integer literal exponents only.
struct ParseContext {
  Chart chart;
  bool allow_jets = true;
};

using Value = std::variant<RationalFunction, DifferentialForm>;

Value parse(const std::string& text, const ParseContext& ctx);
RationalFunction parse_rational(const std::string& text, const ParseContext& ctx);
DifferentialForm parse_form(const std::string& text, const ParseContext& ctx);

// canonical printers; parse(print(e)) == e on canonical inputs
std::string print(const Scalar& c);
std::string print(const Polynomial& p);
std::string print(const RationalFunction& f);
std::string print(const DifferentialForm& w);

// one "name: expr" line per fiber coordinate
std::string print_field(const VectorField& x);

} // namespace jetgal::expr

#endif
