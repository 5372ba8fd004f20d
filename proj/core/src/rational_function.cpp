#include "jetgal/rational_function.hpp"

namespace jetgal {

RationalFunction::RationalFunction(Polynomial n, Polynomial d)
    : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) raise(errc::division_by_zero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  if (!den_.is_one()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Polynomial::exact_div(num_, g);
      den_ = Polynomial::exact_div(den_, g);
    }
  }
  const Scalar& lc = den_.leading_term().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar RationalFunction::constant_value() const {
  if (!is_constant()) raise(errc::invalid_argument, "rational function is not constant");
  return num_.constant_value();
}

std::set<Symbol> RationalFunction::symbols() const {
  std::set<Symbol> out = num_.symbols();
  for (const auto& s : den_.symbols()) out.insert(s);
  return out;
}

bool RationalFunction::depends_on(const Symbol& s) const {
  return num_.depends_on(s) || den_.depends_on(s);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial g = Polynomial::gcd(a.den_, b.den_);
  Polynomial da = Polynomial::exact_div(a.den_, g);
  Polynomial db = Polynomial::exact_div(b.den_, g);
  return RationalFunction(a.num_ * db + b.num_ * da, a.den_ * db);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // cross-cancel before multiplying
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial n = Polynomial::exact_div(a.num_, g1) * Polynomial::exact_div(b.num_, g2);
  Polynomial d = Polynomial::exact_div(a.den_, g2) * Polynomial::exact_div(b.den_, g1);
  RationalFunction r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  const Scalar& lc = r.den_.leading_term().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  const Scalar& lc = r.den_.leading_term().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) raise(errc::division_by_zero, "division by zero rational function");
  return a * b.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction acc(Scalar(1)), base = *this;
  unsigned long k = (unsigned long)e;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

RationalFunction RationalFunction::derivative(const Symbol& s) const {
  if (den_.is_one()) return RationalFunction(num_.derivative(s));
  Polynomial n = num_.derivative(s) * den_ - num_ * den_.derivative(s);
  return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction substitute(const Polynomial& p,
                            const std::map<Symbol, RationalFunction>& sigma) {
  // cache powers of each substituted image
  std::map<Symbol, std::vector<RationalFunction>> powers;
  auto power = [&](const Symbol& s, unsigned e) -> RationalFunction {
    auto it = sigma.find(s);
    if (it == sigma.end()) return RationalFunction::variable(s, e);
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(RationalFunction(Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  RationalFunction acc;
  for (const auto& t : p.terms()) {
    RationalFunction v(t.coeff);
    for (const auto& f : t.mono.factors()) v = v * power(f.first, f.second);
    acc += v;
  }
  return acc;
}

RationalFunction RationalFunction::substitute(
    const std::map<Symbol, RationalFunction>& sigma) const {
  RationalFunction n = jetgal::substitute(num_, sigma);
  RationalFunction d = jetgal::substitute(den_, sigma);
  if (d.is_zero())
    raise(errc::denominator_vanishes, "substituted denominator is identically zero");
  return n / d;
}

Scalar RationalFunction::evaluate(const std::map<Symbol, Scalar>& point) const {
  Scalar d = den_.evaluate(point);
  if (d.is_zero()) raise(errc::division_by_zero, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

std::optional<Scalar> RationalFunction::evaluate_opt(
    const std::map<Symbol, Scalar>& point) const {
  Scalar d = den_.evaluate(point);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(point) / d;
}

bool RationalFunction::equals_cross(const RationalFunction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

} // namespace jetgal
