#ifndef JETGAL_POLYNOMIAL_HPP
#define JETGAL_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <vector>

#include "jetgal/scalar.hpp"
#include "jetgal/symbol.hpp"

namespace jetgal {

// Power product with sparse factors sorted by symbol.
class Monomial {
public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(const Symbol& s, unsigned e = 1);
  explicit Monomial(std::vector<Factor> factors); // sorted, positive exponents

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned degree_in(const Symbol& s) const;
  bool is_unit() const { return factors_.empty(); }

  static Monomial mul(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& a, const Monomial& b); // a | b
  static Monomial div(const Monomial& b, const Monomial& a); // b / a, exact
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // graded lexicographic: total degree first, then lexicographic with the
  // lexicographically smallest symbol most significant
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Monomial& o) const { return compare(*this, o) != 0; }

private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct TermOrderGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

// Sparse multivariate polynomial over Scalar, terms in descending term
// order, no zero coefficients stored.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  Polynomial() = default;
  Polynomial(const Scalar& c);
  Polynomial(long n) : Polynomial(Scalar(n)) {}
  static Polynomial variable(const Symbol& s, unsigned e = 1);
  static Polynomial term(const Scalar& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // constant value; zero polynomial gives 0
  Scalar constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  unsigned total_degree() const; // 0 for the zero polynomial
  unsigned degree_in(const Symbol& s) const;

  std::set<Symbol> symbols() const;
  bool depends_on(const Symbol& s) const { return degree_in(s) > 0; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
  Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }
  Polynomial& operator*=(const Polynomial& b) { *this = *this * b; return *this; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  // quotient of an exact division; NotDivisible otherwise
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  // monic gcd (leading coefficient 1 in term order); gcd(0,0) = 0
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(const Symbol& s) const;
  // point must cover every symbol of the polynomial
  Scalar evaluate(const std::map<Symbol, Scalar>& point) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
  std::vector<Term> terms_;
};

} // namespace jetgal

#endif
