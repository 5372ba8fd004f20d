#include "cli_common.hpp"

#include <sstream>

namespace jetgal::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

} // namespace

std::vector<std::string> split_names(const std::string& text) { return split(text, ','); }

void register_extension_spec(const std::string& spec) {
  // IDENT '^' INT '=' rational
  auto caret = spec.find('^');
  auto eq = spec.find('=');
  if (caret == std::string::npos || eq == std::string::npos || eq < caret)
    raise(errc::invalid_argument, "extension must look like 'rho^6=2'");
  std::string genname = trim(spec.substr(0, caret));
  unsigned power = (unsigned)std::stoul(trim(spec.substr(caret + 1, eq - caret - 1)));
  Scalar value = Scalar::from_string(trim(spec.substr(eq + 1)));
  if (power < 2) raise(errc::invalid_argument, "extension degree must be >= 2");
  std::vector<Rational> minpoly(power, Rational(0));
  minpoly[0] = -value.rational();
  register_extension(genname, std::move(minpoly));
}

Chart ChartOptions::build() const {
  if (!extension.empty()) register_extension_spec(extension);
  return Chart(split_names(fiber), split_names(params));
}

VectorField parse_field_coeffs(const Chart& chart, const std::string& text) {
  std::vector<std::string> parts = split(text, ';');
  if (parts.size() != chart.fiber_dim())
    raise(errc::invalid_argument, "expected one coefficient per fiber coordinate");
  expr::ParseContext ctx{chart, true};
  std::vector<RationalFunction> coeffs;
  for (const auto& p : parts) coeffs.push_back(expr::parse_rational(p, ctx));
  return VectorField(chart, std::move(coeffs));
}

std::map<Symbol, RationalFunction> parse_assignments(const expr::ParseContext& ctx,
                                                     const std::string& text) {
  std::map<Symbol, RationalFunction> out;
  for (const auto& item : split(text, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      raise(errc::invalid_argument, "expected 'name=expr' in '" + item + "'");
    Symbol s(trim(item.substr(0, eq)));
    out.emplace(s, expr::parse_rational(item.substr(eq + 1), ctx));
  }
  return out;
}

std::map<Symbol, Scalar> parse_scalar_assignments(const std::string& text) {
  std::map<Symbol, Scalar> out;
  for (const auto& item : split(text, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      raise(errc::invalid_argument, "expected 'name=value' in '" + item + "'");
    out.emplace(Symbol(trim(item.substr(0, eq))),
                Scalar::from_string(trim(item.substr(eq + 1))));
  }
  return out;
}

VectorField FieldSource::build() const {
  if (!painleve_id.empty()) {
    painleve::Id id = painleve::id_from_string(painleve_id);
    if (!set.empty()) return painleve::field(id, parse_scalar_assignments(set));
    return painleve::field(id);
  }
  if (chart.fiber.empty() || coeffs.empty())
    raise(errc::invalid_argument, "a field needs --chart and --field");
  return parse_field_coeffs(chart.build(), coeffs);
}

} // namespace jetgal::cli
