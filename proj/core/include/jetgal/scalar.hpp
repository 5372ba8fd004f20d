#ifndef JETGAL_SCALAR_HPP
#define JETGAL_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "jetgal/errors.hpp"

namespace jetgal {

using Rational = mpq_class;

// Simple algebraic extension Q[rho]/(p(rho)) for one monic p per session.
// Irreducibility is not checked; inverting a zero divisor raises ZeroDivisor.
class AlgebraicExtension {
public:
  // minpoly holds c_0..c_{n-1} of p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0, n >= 2.
  AlgebraicExtension(std::string generator, std::vector<Rational> minpoly);

  const std::string& generator() const { return generator_; }
  std::size_t degree() const { return minpoly_.size(); }
  const std::vector<Rational>& minpoly() const { return minpoly_; }

  bool same_as(const AlgebraicExtension& other) const;

private:
  std::string generator_;
  std::vector<Rational> minpoly_;
};

using ExtensionPtr = std::shared_ptr<const AlgebraicExtension>;

// Session-wide registration. Registering an extension equal to the active one
// is a no-op; registering a different one while active is an error.
void register_extension(std::string generator, std::vector<Rational> minpoly);
void clear_extension();
ExtensionPtr current_extension();

// Element of Q, or of Q[rho]/(p) once an extension is registered.
// Canonical: coefficient vector has no trailing zeros; plain rationals carry
// no extension pointer.
class Scalar {
public:
  Scalar() : coeffs_(1, Rational(0)) {}
  Scalar(long n) : coeffs_(1, Rational(n)) {}
  Scalar(const Rational& q) : coeffs_(1, q) { coeffs_[0].canonicalize(); }
  Scalar(long num, long den);

  static Scalar from_string(const std::string& text); // "p/q" or "p"

  // rho^power in the registered extension
  static Scalar generator_power(unsigned power = 1);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return coeffs_.size() == 1; }
  bool is_integer() const;

  // requires is_rational()
  const Rational& rational() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  ExtensionPtr extension() const { return ext_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
  Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
  Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
  Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  // Sign of the highest nonzero coefficient; 0 for zero. Used only for
  // display normalization and the denominator sign convention.
  int lead_sign() const;

  std::string str() const;

private:
  Scalar(std::vector<Rational> coeffs, ExtensionPtr ext);
  void normalize();
  static void align(Scalar& a, Scalar& b);

  std::vector<Rational> coeffs_;
  ExtensionPtr ext_; // null iff coeffs_.size() == 1
};

} // namespace jetgal

#endif
