#include "jetgal/polynomial.hpp"
#include <cstdint>

#include <algorithm>

namespace jetgal {

Monomial::Monomial(const Symbol& s, unsigned e) {
  if (e > 0) {
    factors_.push_back({s, e});
    degree_ = e;
  }
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) degree_ += f.second;
}

unsigned Monomial::degree_in(const Symbol& s) const {
  for (const auto& f : factors_)
    if (f.first == s) return f.second;
  return 0;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
  auto ib = b.factors_.begin();
  for (const auto& fa : a.factors_) {
    while (ib != b.factors_.end() && ib->first < fa.first) ++ib;
    if (ib == b.factors_.end() || !(ib->first == fa.first) || ib->second < fa.second)
      return false;
  }
  return true;
}

Monomial Monomial::div(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) raise(errc::not_divisible, "monomial division is not exact");
  std::vector<Factor> out;
  auto ia = a.factors_.begin();
  for (const auto& fb : b.factors_) {
    unsigned e = fb.second;
    if (ia != a.factors_.end() && ia->first == fb.first) {
      e -= ia->second;
      ++ia;
    }
    if (e > 0) out.push_back({fb.first, e});
  }
  return Monomial(std::move(out));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.push_back({ia->first, std::min(ia->second, ib->second)});
      ++ia;
      ++ib;
    }
  }
  return Monomial(std::move(out));
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (!(ia->first == ib->first)) return ia->first < ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(const Symbol& s, unsigned e) {
  Polynomial p;
  p.terms_.push_back({Monomial(s, e), Scalar(1)});
  return p;
}

Polynomial Polynomial::term(const Scalar& c, const Monomial& m) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff.is_one();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

Scalar Polynomial::constant_value() const {
  if (is_zero()) return Scalar(0);
  if (!is_constant()) raise(errc::invalid_argument, "polynomial is not constant");
  return terms_[0].coeff;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) raise(errc::invalid_argument, "leading term of zero polynomial");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned Polynomial::degree_in(const Symbol& s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(s));
  return d;
}

std::set<Symbol> Polynomial::symbols() const {
  std::set<Symbol> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.first);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    int cmp;
    if (ia == a.terms_.end()) cmp = -1;
    else if (ib == b.terms_.end()) cmp = 1;
    else cmp = Monomial::compare(ia->mono, ib->mono);
    if (cmp > 0) {
      r.terms_.push_back(*ia++);
    } else if (cmp < 0) {
      r.terms_.push_back(*ib++);
    } else {
      Scalar c = ia->coeff + ib->coeff;
      if (!c.is_zero()) r.terms_.push_back({ia->mono, c});
      ++ia;
      ++ib;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::map<Monomial, Scalar, TermOrderGreater> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = Monomial::mul(ta.mono, tb.mono);
      Scalar c = ta.coeff * tb.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  Polynomial r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc(Scalar(1)), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  Polynomial rem = a, quo;
  const Term& lb = b.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!Monomial::divides(lb.mono, lr.mono))
      raise(errc::not_divisible, "polynomial division is not exact");
    Polynomial t = Polynomial::term(lr.coeff / lb.coeff, Monomial::div(lr.mono, lb.mono));
    quo += t;
    rem -= t * b;
  }
  return quo;
}

Polynomial Polynomial::derivative(const Symbol& s) const {
  Polynomial r;
  for (const auto& t : terms_) {
    unsigned e = t.mono.degree_in(s);
    if (e == 0) continue;
    std::vector<Monomial::Factor> fs;
    for (const auto& f : t.mono.factors()) {
      if (f.first == s) {
        if (f.second > 1) fs.push_back({f.first, f.second - 1});
      } else {
        fs.push_back(f);
      }
    }
    r += Polynomial::term(t.coeff * Scalar((long)e), Monomial(std::move(fs)));
  }
  return r;
}

Scalar Polynomial::evaluate(const std::map<Symbol, Scalar>& point) const {
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = point.find(f.first);
      if (it == point.end())
        raise(errc::unknown_symbol, "no value for '" + f.first.name() + "'");
      v *= it->second.pow(f.second);
    }
    acc += v;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono) return false;
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// gcd: monomial content first, then primitive PRS in a chosen main variable

namespace {

Monomial monomial_content(const Polynomial& p) {
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    if (g.is_unit()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

Polynomial divide_monomial(const Polynomial& p, const Monomial& m) {
  if (m.is_unit()) return p;
  Polynomial q;
  for (const auto& t : p.terms())
    q += Polynomial::term(t.coeff, Monomial::div(t.mono, m));
  return q;
}

// coefficients of p as a univariate polynomial in x, index = degree
std::vector<Polynomial> univariate_view(const Polynomial& p, const Symbol& x) {
  std::vector<Polynomial> c(p.degree_in(x) + 1);
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.degree_in(x);
    std::vector<Monomial::Factor> fs;
    for (const auto& f : t.mono.factors())
      if (!(f.first == x)) fs.push_back(f);
    c[e] += Polynomial::term(t.coeff, Monomial(std::move(fs)));
  }
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  return c;
}

Polynomial assemble(const std::vector<Polynomial>& c, const Symbol& x) {
  Polynomial p;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    p += c[e] * Polynomial::variable(x, (unsigned)e);
  }
  return p;
}

// pseudo-remainder of a by b in variable x (b nonzero in x)
std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  const Polynomial& lb = b.back();
  auto vanished = [](const std::vector<Polynomial>& v) {
    return v.size() == 1 && v[0].is_zero();
  };
  while (a.size() >= b.size() && !vanished(a)) {
    std::size_t shift = a.size() - b.size();
    Polynomial la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
  }
  return a;
}

Polynomial normalize_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_term().coeff.inverse());
}

// dense univariate Euclid over the scalar field; empty vector = 0
std::vector<Scalar> scalar_euclid(std::vector<Scalar> a, std::vector<Scalar> b) {
  auto trim = [](std::vector<Scalar>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    Scalar inv = b.back().inverse();
    while (a.size() >= b.size()) {
      Scalar f = a.back() * inv;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

struct ProbeRng {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  long next(long bound) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return (long)(state % (std::uint64_t)(2 * bound + 1)) - bound;
  }
};

enum class ProbeResult { coprime, inconclusive };

// If a random evaluation of the non-main variables preserves both degrees in
// x and yields coprime univariate images, any common divisor of a and b is
// free of x. Sound, never required: failure just falls back to the PRS.
ProbeResult coprime_probe(const std::vector<Polynomial>& ua,
                          const std::vector<Polynomial>& ub,
                          const std::set<Symbol>& others) {
  ProbeRng rng;
  for (int trial = 0; trial < 3; ++trial) {
    long bound = 25l << trial;
    std::map<Symbol, Scalar> point;
    for (const auto& s : others) point.emplace(s, Scalar(rng.next(bound)));
    try {
      std::vector<Scalar> ea(ua.size()), eb(ub.size());
      for (std::size_t i = 0; i < ua.size(); ++i) ea[i] = ua[i].evaluate(point);
      for (std::size_t i = 0; i < ub.size(); ++i) eb[i] = ub[i].evaluate(point);
      if (ea.back().is_zero() || eb.back().is_zero()) continue; // degree dropped
      std::vector<Scalar> g = scalar_euclid(std::move(ea), std::move(eb));
      if (g.size() == 1) return ProbeResult::coprime;
    } catch (const error&) {
      continue; // a zero divisor in an extension; just skip the shortcut
    }
  }
  return ProbeResult::inconclusive;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_monic(b);
  if (b.is_zero()) return normalize_monic(a);

  Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial mg = Monomial::gcd(ma, mb);
  Polynomial pa = divide_monomial(a, ma);
  Polynomial pb = divide_monomial(b, mb);

  if (pa.is_constant() || pb.is_constant())
    return normalize_monic(Polynomial::term(Scalar(1), mg));

  // main variable: smallest combined degree, ties by symbol order
  std::set<Symbol> syms = pa.symbols();
  for (const auto& s : pb.symbols()) syms.insert(s);
  Symbol x;
  unsigned best = 0;
  bool first = true;
  for (const auto& s : syms) {
    unsigned da = pa.degree_in(s), db = pb.degree_in(s);
    if (da == 0 && db == 0) continue;
    unsigned d = da + db;
    if (first || d < best) {
      x = s;
      best = d;
      first = false;
    }
  }

  auto ua = univariate_view(pa, x);
  auto ub = univariate_view(pb, x);

  std::set<Symbol> others = syms;
  others.erase(x);

  // univariate over the scalar field: plain Euclid
  if (others.empty()) {
    std::vector<Scalar> ca(ua.size()), cb(ub.size());
    for (std::size_t i = 0; i < ua.size(); ++i) ca[i] = ua[i].constant_value();
    for (std::size_t i = 0; i < ub.size(); ++i) cb[i] = ub[i].constant_value();
    std::vector<Scalar> g = scalar_euclid(std::move(ca), std::move(cb));
    Polynomial out;
    for (std::size_t i = 0; i < g.size(); ++i)
      out += Polynomial::term(g[i], Monomial(x, (unsigned)i));
    out = out * Polynomial::term(Scalar(1), mg);
    return normalize_monic(out);
  }

  // cheap coprimality shortcut: when it fires, the gcd is a common divisor
  // of all the coefficients
  if (coprime_probe(ua, ub, others) == ProbeResult::coprime) {
    Polynomial g;
    for (const auto& p : ua) g = Polynomial::gcd(g, p);
    for (const auto& p : ub) g = Polynomial::gcd(g, p);
    g = g * Polynomial::term(Scalar(1), mg);
    return normalize_monic(g);
  }

  auto content = [](const std::vector<Polynomial>& u) {
    Polynomial c;
    for (const auto& p : u) c = Polynomial::gcd(c, p);
    return c;
  };
  auto divided_by = [](const std::vector<Polynomial>& u, const Polynomial& c) {
    std::vector<Polynomial> r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      r[i] = u[i].is_zero() ? Polynomial() : Polynomial::exact_div(u[i], c);
    return r;
  };

  Polynomial ca = content(ua), cb = content(ub);
  std::vector<Polynomial> r0 = divided_by(ua, ca), r1 = divided_by(ub, cb);
  if (r0.size() < r1.size()) std::swap(r0, r1);

  while (!(r1.size() == 1 && r1[0].is_zero())) {
    std::vector<Polynomial> r = pseudo_rem(r0, r1);
    if (!(r.size() == 1 && r[0].is_zero())) {
      Polynomial c = content(r);
      r = divided_by(r, c);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
  }

  Polynomial g = Polynomial::gcd(ca, cb);
  if (r0.size() > 1) g = g * assemble(r0, x);
  g = g * Polynomial::term(Scalar(1), mg);
  return normalize_monic(g);
}

} // namespace jetgal
