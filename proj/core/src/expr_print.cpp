#include <sstream>

#include "jetgal/expr.hpp"

namespace jetgal::expr {

namespace {

// number of nonzero coefficients of an extension element
std::size_t scalar_term_count(const Scalar& c) {
  std::size_t n = 0;
  for (const auto& q : c.coeffs())
    if (q != 0) ++n;
  return n;
}

// c with positive lead, printed so that it can stand as a factor in a product
std::string scalar_factor(const Scalar& c) {
  if (c.is_rational()) return c.rational().get_str();
  if (scalar_term_count(c) > 1) return "(" + c.str() + ")";
  // single generator term q*rho^k
  const auto& coeffs = c.coeffs();
  std::size_t k = coeffs.size() - 1;
  while (coeffs[k] == 0) --k;
  std::ostringstream os;
  if (coeffs[k] != 1) os << coeffs[k].get_str() << "*";
  os << current_extension()->generator();
  if (k > 1) os << "^" << k;
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, e] : m.factors()) {
    if (!first) os << "*";
    first = false;
    os << s.name();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

// term with positive-lead coefficient
std::string term_str(const Scalar& c, const Monomial& m) {
  if (m.is_unit()) {
    if (c.is_rational() || scalar_term_count(c) <= 1) {
      if (c.is_rational()) return c.rational().get_str();
      return scalar_factor(c);
    }
    return c.str(); // bare sum is fine inside a polynomial sum
  }
  if (c.is_one()) return monomial_str(m);
  return scalar_factor(c) + "*" + monomial_str(m);
}

} // namespace

std::string print(const Scalar& c) { return c.str(); }

std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    int sign = t.coeff.lead_sign();
    Scalar mag = sign < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (sign < 0) os << "-";
      first = false;
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    os << term_str(mag, t.mono);
  }
  return os.str();
}

namespace {

bool needs_parens_as_numerator(const Polynomial& p) {
  return p.terms().size() > 1;
}

// a monic denominator prints bare only when it is a single power of a single
// symbol; anything else would re-associate under * and /
bool needs_parens_as_denominator(const Polynomial& p) {
  if (p.terms().size() != 1) return true;
  const auto& t = p.terms().front();
  return !t.coeff.is_one() || t.mono.factors().size() != 1;
}

} // namespace

std::string print(const RationalFunction& f) {
  if (f.is_polynomial()) return print(f.num());
  std::ostringstream os;
  if (needs_parens_as_numerator(f.num()))
    os << "(" << print(f.num()) << ")";
  else
    os << print(f.num());
  os << "/";
  if (needs_parens_as_denominator(f.den()))
    os << "(" << print(f.den()) << ")";
  else
    os << print(f.den());
  return os.str();
}

std::string print(const DifferentialForm& w) {
  if (w.degree() == 0) {
    if (w.is_zero()) return "0";
    return print(w.terms().begin()->second);
  }
  if (w.is_zero()) return "0";
  const Chart& chart = w.chart();
  std::ostringstream os;
  bool first = true;
  bool single = w.terms().size() == 1;
  for (const auto& [idx, c] : w.terms()) {
    // sign comes from the leading coefficient of the numerator
    int sign = c.num().leading_term().coeff.lead_sign();
    RationalFunction mag = sign < 0 ? -c : c;
    std::ostringstream chain;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) chain << " /\\ ";
      chain << "d(" << chart.fiber(idx[i]).name() << ")";
    }
    if (first) {
      if (sign < 0) os << "-";
      first = false;
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    if (mag.is_one()) {
      os << (single && sign > 0 ? chain.str() : "(" + chain.str() + ")");
    } else {
      std::string coeff = print(mag);
      if (mag.is_polynomial() && needs_parens_as_numerator(mag.num()))
        coeff = "(" + coeff + ")";
      os << coeff << "*(" << chain.str() << ")";
    }
  }
  return os.str();
}

std::string print_field(const VectorField& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.chart().fiber_dim(); ++i) {
    if (i) os << "\n";
    os << x.chart().fiber(i).name() << ": " << print(x.coeff(i));
  }
  return os.str();
}

} // namespace jetgal::expr
