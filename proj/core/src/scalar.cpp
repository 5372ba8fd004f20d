#include "jetgal/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

namespace jetgal {

AlgebraicExtension::AlgebraicExtension(std::string generator, std::vector<Rational> minpoly)
    : generator_(std::move(generator)), minpoly_(std::move(minpoly)) {
  if (minpoly_.size() < 2)
    raise(errc::invalid_argument, "extension degree must be >= 2");
  for (auto& c : minpoly_) c.canonicalize();
}

bool AlgebraicExtension::same_as(const AlgebraicExtension& other) const {
  return generator_ == other.generator_ && minpoly_ == other.minpoly_;
}

namespace {
std::mutex ext_mutex;
ExtensionPtr active_extension;
} // namespace

void register_extension(std::string generator, std::vector<Rational> minpoly) {
  auto ext = std::make_shared<const AlgebraicExtension>(std::move(generator), std::move(minpoly));
  std::lock_guard<std::mutex> lock(ext_mutex);
  if (active_extension) {
    if (!active_extension->same_as(*ext))
      raise(errc::invalid_argument, "a different algebraic extension is already registered");
    return;
  }
  active_extension = std::move(ext);
}

void clear_extension() {
  std::lock_guard<std::mutex> lock(ext_mutex);
  active_extension.reset();
}

ExtensionPtr current_extension() {
  std::lock_guard<std::mutex> lock(ext_mutex);
  return active_extension;
}

Scalar::Scalar(long num, long den) : coeffs_(1, Rational(num, den)) {
  if (den == 0) raise(errc::division_by_zero, "rational with zero denominator");
  coeffs_[0].canonicalize();
}

Scalar Scalar::from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    raise(errc::invalid_argument, "bad rational literal '" + text + "'");
  q.canonicalize();
  return Scalar(q);
}

Scalar::Scalar(std::vector<Rational> coeffs, ExtensionPtr ext)
    : coeffs_(std::move(coeffs)), ext_(std::move(ext)) {
  normalize();
}

void Scalar::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() == 1) ext_.reset();
}

Scalar Scalar::generator_power(unsigned power) {
  ExtensionPtr ext = current_extension();
  if (!ext) raise(errc::invalid_argument, "no algebraic extension registered");
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = 1;
  if (power < ext->degree()) return Scalar(std::move(c), ext);
  // reduce by repeated multiplication
  Scalar r(1);
  Scalar gen = generator_power(1);
  for (unsigned i = 0; i < power; ++i) r = r * gen;
  return r;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

bool Scalar::is_integer() const {
  return coeffs_.size() == 1 && coeffs_[0].get_den() == 1;
}

const Rational& Scalar::rational() const {
  if (!is_rational()) raise(errc::invalid_argument, "scalar is not rational");
  return coeffs_[0];
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.ext_ && b.ext_ && !a.ext_->same_as(*b.ext_))
    raise(errc::invalid_argument, "scalars from different extensions");
  if (!a.ext_ && b.ext_) a.ext_ = b.ext_;
  if (!b.ext_ && a.ext_) b.ext_ = a.ext_;
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  a.coeffs_.resize(n, Rational(0));
  b.coeffs_.resize(n, Rational(0));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  x.normalize();
  return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

namespace {

// reduce a dense coefficient vector modulo the monic minimal polynomial
void reduce_mod(std::vector<Rational>& c, const AlgebraicExtension& ext) {
  const std::size_t n = ext.degree();
  const auto& p = ext.minpoly();
  for (std::size_t i = c.size(); i-- > n;) {
    Rational lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < n; ++j) c[i - n + j] -= lead * p[j];
  }
  c.resize(std::max<std::size_t>(n, 1));
}

} // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) {
    Rational r = a.coeffs_[0] * b.coeffs_[0];
    r.canonicalize();
    return Scalar(r);
  }
  Scalar x = a, y = b;
  Scalar::align(x, y);
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  reduce_mod(prod, *x.ext_);
  return Scalar(std::move(prod), x.ext_);
}

namespace {

// univariate polynomial helpers over Q, dense, no trailing zeros
using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

// a = q*b + r, deg r < deg b; b nonzero
void udivrem(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    utrim(a);
  }
  utrim(q);
  r = std::move(a);
}

} // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
  if (is_rational()) {
    Rational r = 1 / coeffs_[0];
    r.canonicalize();
    return Scalar(r);
  }
  // extended Euclid: u*a + v*p = gcd, in Q[x]
  UPoly p = ext_->minpoly();
  p.push_back(Rational(1));
  UPoly a = coeffs_;
  utrim(a);
  UPoly r0 = p, r1 = a;
  UPoly s0 = {}, s1 = {Rational(1)}; // coefficients of `a` in the combination
  while (!r1.empty()) {
    UPoly q, r;
    udivrem(r0, r1, q, r);
    UPoly s = usub(s0, umul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1)
    raise(errc::zero_divisor, "element is a zero divisor in the extension");
  Rational g = r0[0];
  std::vector<Rational> inv(s0.size());
  for (std::size_t i = 0; i < s0.size(); ++i) inv[i] = s0[i] / g;
  inv.resize(std::max<std::size_t>(inv.size(), 1), Rational(0));
  return Scalar(std::move(inv), ext_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) raise(errc::division_by_zero, "scalar division by zero");
  if (a.is_rational() && b.is_rational()) {
    Rational r = a.coeffs_[0] / b.coeffs_[0];
    r.canonicalize();
    return Scalar(r);
  }
  return a * b.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar base = *this, acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& b) const {
  if (coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

int Scalar::lead_sign() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) return sgn(coeffs_[i]);
  return 0;
}

std::string Scalar::str() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << ext_->generator();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

} // namespace jetgal
