#ifndef JETGAL_RATIONAL_FUNCTION_HPP
#define JETGAL_RATIONAL_FUNCTION_HPP

#include <map>
#include <optional>

#include "jetgal/polynomial.hpp"

namespace jetgal {

// Reduced fraction of polynomials. Canonical: gcd(num, den) = 1, denominator
// monic in term order, zero is 0/1.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Scalar(1)) {}
  RationalFunction(const Scalar& c) : num_(c), den_(Scalar(1)) {}
  RationalFunction(long n) : num_(Scalar(n)), den_(Scalar(1)) {}
  RationalFunction(Polynomial n) : num_(std::move(n)), den_(Scalar(1)) {}
  RationalFunction(Polynomial n, Polynomial d);

  static RationalFunction variable(const Symbol& s, unsigned e = 1) {
    return RationalFunction(Polynomial::variable(s, e));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Scalar constant_value() const;

  std::set<Symbol> symbols() const;
  bool depends_on(const Symbol& s) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { *this = *this + b; return *this; }
  RationalFunction& operator-=(const RationalFunction& b) { *this = *this - b; return *this; }
  RationalFunction& operator*=(const RationalFunction& b) { *this = *this * b; return *this; }
  RationalFunction& operator/=(const RationalFunction& b) { *this = *this / b; return *this; }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  RationalFunction derivative(const Symbol& s) const;

  // simultaneous substitution; DenominatorVanishes if the substituted
  // denominator is identically zero
  RationalFunction substitute(const std::map<Symbol, RationalFunction>& sigma) const;

  Scalar evaluate(const std::map<Symbol, Scalar>& point) const; // DivisionByZero at poles
  std::optional<Scalar> evaluate_opt(const std::map<Symbol, Scalar>& point) const;

  // canonical forms make equality structural; exposed for tests that
  // cross-check canonicalization against a*d == c*b
  bool equals_cross(const RationalFunction& o) const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
  void normalize();
  Polynomial num_, den_;
};

// substitution on a bare polynomial, yielding a rational function
RationalFunction substitute(const Polynomial& p,
                            const std::map<Symbol, RationalFunction>& sigma);

} // namespace jetgal

#endif
