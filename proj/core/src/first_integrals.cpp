#include "jetgal/first_integrals.hpp"

#include <algorithm>

namespace jetgal {

namespace {

// weight of a variable under the jet_order functional: |alpha| for a jet
// symbol "base[a1,...,am]", 1 otherwise
unsigned jet_weight(const Symbol& s) {
  const std::string& n = s.name();
  auto b = n.find('[');
  if (b == std::string::npos || n.back() != ']') return 1;
  unsigned w = 0, cur = 0;
  for (std::size_t p = b + 1; p + 1 < n.size(); ++p) {
    char c = n[p];
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + unsigned(c - '0');
    } else if (c == ',') {
      w += cur;
      cur = 0;
    } else {
      return 1;
    }
  }
  w += cur;
  return std::max(w, 1u);
}

std::vector<Monomial> enumerate_candidates(const std::vector<Symbol>& vars,
                                           const std::vector<unsigned>& weights,
                                           unsigned bound) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  auto rec = [&](auto&& self, std::size_t pos, unsigned rest) -> void {
    if (pos == vars.size()) {
      std::vector<Monomial::Factor> sorted = cur;
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(Monomial(std::move(sorted)));
      return;
    }
    self(self, pos + 1, rest);
    unsigned w = weights[pos];
    for (unsigned e = 1; e * w <= rest; ++e) {
      cur.push_back({vars[pos], e});
      self(self, pos + 1, rest - e * w);
      cur.pop_back();
    }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) < 0; });
  return out;
}

using Vec = std::map<Monomial, RationalFunction, TermOrderGreater>;

Vec vectorize(const Polynomial& p, const std::set<Symbol>& main_vars) {
  Vec v;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> main, rest;
    for (const auto& f : t.mono.factors())
      (main_vars.count(f.first) ? main : rest).push_back(f);
    Monomial key(std::move(main));
    Polynomial part = Polynomial::term(t.coeff, Monomial(std::move(rest)));
    auto it = v.find(key);
    if (it == v.end()) {
      v.emplace(std::move(key), RationalFunction(std::move(part)));
    } else {
      it->second += RationalFunction(std::move(part));
      if (it->second.is_zero()) v.erase(it);
    }
  }
  return v;
}

// incremental row reduction over the parameter field
class RowSpace {
public:
  Vec reduce(Vec v) const {
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = rows_.find(lead->first);
      if (pivot == rows_.end()) return v;
      RationalFunction f = lead->second;
      for (const auto& [m, c] : pivot->second) {
        auto it = v.find(m);
        if (it == v.end()) {
          v.emplace(m, -(f * c));
        } else {
          it->second -= f * c;
          if (it->second.is_zero()) v.erase(it);
        }
      }
    }
    return v;
  }

  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    RationalFunction inv = v.begin()->second.inverse();
    Monomial pivot = v.begin()->first;
    for (auto& [m, c] : v) c *= inv;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

private:
  std::map<Monomial, Vec, TermOrderGreater> rows_;
};

struct ClearedField {
  Polynomial common_den;
  std::vector<Polynomial> numerators; // aligned with chart fiber coords
};

ClearedField clear_denominators(const VectorField& x) {
  ClearedField out;
  out.common_den = Polynomial(Scalar(1));
  for (const auto& c : x.coeffs()) {
    if (c.is_zero()) continue;
    Polynomial g = Polynomial::gcd(out.common_den, c.den());
    out.common_den = out.common_den * Polynomial::exact_div(c.den(), g);
  }
  for (const auto& c : x.coeffs()) {
    if (c.is_zero()) {
      out.numerators.push_back(Polynomial());
    } else {
      out.numerators.push_back(c.num() * Polynomial::exact_div(out.common_den, c.den()));
    }
  }
  return out;
}

} // namespace

VerifyResult verify_first_integral(const VectorField& x, const RationalFunction& h) {
  VerifyResult r;
  r.residue = x.apply(h);
  r.pass = r.residue.is_zero();
  return r;
}

VectorField restrict_to_slice(const VectorField& x,
                              const std::map<Symbol, RationalFunction>& slice) {
  const Chart& chart = x.chart();
  for (const auto& [s, v] : slice) {
    if (!chart.fiber_index(s))
      raise(errc::unknown_symbol, "slice key '" + s.name() + "' is not a fiber coordinate");
    for (const auto& sym : v.symbols()) {
      if (!chart.contains(sym) || slice.count(sym))
        raise(errc::invalid_argument,
              "slice value for '" + s.name() + "' must use remaining chart symbols");
    }
  }
  // the slice must be invariant: X(s - value) restricted to the slice is 0
  for (const auto& [s, v] : slice) {
    RationalFunction r = (x.coeff(s) - x.apply(v)).substitute(slice);
    if (!r.is_zero())
      raise(errc::invariant_violated, "slice is not invariant along '" + s.name() + "'");
  }
  std::vector<Symbol> fiber;
  std::vector<RationalFunction> coeffs;
  for (std::size_t i = 0; i < chart.fiber_dim(); ++i) {
    if (slice.count(chart.fiber(i))) continue;
    fiber.push_back(chart.fiber(i));
    coeffs.push_back(x.coeff(i).substitute(slice));
  }
  return VectorField(Chart::from_symbols(std::move(fiber), chart.params()), std::move(coeffs));
}

namespace {

FirstIntegralBasis search(const VectorField& x, const Polynomial& q, unsigned degree_bound,
                          unsigned jmax, DegreeWeighting weighting) {
  if (q.is_zero()) raise(errc::zero_denominator, "fixed denominator is zero");
  const Chart& chart = x.chart();
  std::set<Symbol> main_vars(chart.fiber().begin(), chart.fiber().end());

  std::vector<unsigned> weights(chart.fiber_dim(), 1);
  if (weighting == DegreeWeighting::jet_order)
    for (std::size_t i = 0; i < chart.fiber_dim(); ++i)
      weights[i] = jet_weight(chart.fiber(i));

  std::vector<Monomial> candidates =
      enumerate_candidates(chart.fiber(), weights, degree_bound);

  ClearedField cf = clear_denominators(x);
  Polynomial xq; // sum_i N_i dQ/dw_i
  for (std::size_t i = 0; i < chart.fiber_dim(); ++i) {
    if (cf.numerators[i].is_zero()) continue;
    Polynomial dq = q.derivative(chart.fiber(i));
    if (dq.is_zero()) continue;
    xq += cf.numerators[i] * dq;
  }

  FirstIntegralBasis out;
  out.field = x;
  out.degree_bound = degree_bound;
  if (!q.is_one()) out.denominator = q;
  out.jmax = q.is_one() ? 0 : jmax;

  RowSpace seen;
  RationalFunction qrf{q};
  for (unsigned j = 0; j <= out.jmax; ++j) {
    // columns: Q * X(M) - j M X(Q), split into fiber monomial rows with
    // parameter-polynomial entries
    std::vector<Vec> columns;
    columns.reserve(candidates.size());
    std::map<Monomial, std::size_t, TermOrderGreater> row_index;
    for (const auto& m : candidates) {
      Polynomial cand = Polynomial::term(Scalar(1), m);
      Polynomial e;
      for (std::size_t i = 0; i < chart.fiber_dim(); ++i) {
        if (cf.numerators[i].is_zero()) continue;
        Polynomial dm = cand.derivative(chart.fiber(i));
        if (dm.is_zero()) continue;
        e += cf.numerators[i] * dm;
      }
      if (!q.is_one()) e = q * e;
      if (j > 0) e -= Polynomial(Scalar((long)j)) * cand * xq;
      columns.push_back(vectorize(e, main_vars));
      for (const auto& [rk, c] : columns.back())
        row_index.emplace(rk, 0);
    }
    std::size_t nrows = 0;
    for (auto& [rk, idx] : row_index) idx = nrows++;

    Matrix mat(nrows, candidates.size());
    for (std::size_t cidx = 0; cidx < columns.size(); ++cidx)
      for (const auto& [rk, c] : columns[cidx]) mat.at(row_index[rk], cidx) = c;

    for (const auto& kernel : mat.nullspace()) {
      RationalFunction p;
      for (std::size_t cidx = 0; cidx < candidates.size(); ++cidx) {
        if (kernel[cidx].is_zero()) continue;
        p += kernel[cidx] * RationalFunction(Polynomial::term(Scalar(1), candidates[cidx]));
      }
      RationalFunction h = (j == 0) ? p : p / qrf.pow((long)j);
      // vectorize H * Q^jmax for the cross-layer dedup
      RationalFunction scaled = h * qrf.pow((long)out.jmax);
      Polynomial cleared = scaled.num();
      Vec v;
      if (!scaled.den().is_one()) {
        // parameter-only denominator: fold it into the coefficients
        RationalFunction dinv = RationalFunction(scaled.den()).inverse();
        for (const auto& [mk, c] :
             vectorize(cleared, main_vars)) v.emplace(mk, c * dinv);
      } else {
        v = vectorize(cleared, main_vars);
      }
      if (seen.insert(std::move(v))) out.integrals.push_back(h);
    }
  }

  for (const auto& h : out.integrals) {
    if (!verify_first_integral(x, h).pass)
      raise(errc::invariant_violated, "search produced a non-integral; this is a bug");
  }
  return out;
}

} // namespace

FirstIntegralBasis find_polynomial_integrals(const VectorField& x, unsigned degree_bound,
                                             DegreeWeighting weighting) {
  return search(x, Polynomial(Scalar(1)), degree_bound, 0, weighting);
}

FirstIntegralBasis find_fixed_denominator_integrals(const VectorField& x, const Polynomial& q,
                                                    unsigned degree_bound, unsigned jmax,
                                                    DegreeWeighting weighting) {
  return search(x, q, degree_bound, jmax, weighting);
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

} // namespace

std::size_t integral_rank(const FirstIntegralBasis& basis, std::uint64_t seed) {
  if (basis.integrals.empty())
    raise(errc::invalid_argument, "rank of an empty basis");
  const Chart& chart = basis.field.chart();
  std::vector<Symbol> syms = chart.all_symbols();

  std::vector<std::vector<RationalFunction>> jac(basis.integrals.size());
  for (std::size_t i = 0; i < basis.integrals.size(); ++i) {
    jac[i].reserve(chart.fiber_dim());
    for (std::size_t j = 0; j < chart.fiber_dim(); ++j)
      jac[i].push_back(basis.integrals[i].derivative(chart.fiber(j)));
  }

  SplitMix64 rng{seed};
  long bound = 16;
  bool any_valid = false;
  std::size_t best = 0;
  for (int attempt = 0; attempt < 8; ++attempt, bound *= 2) {
    std::map<Symbol, Scalar> point;
    for (const auto& s : syms) {
      long span = 2 * bound + 1;
      long v = (long)(rng.next() % (std::uint64_t)span) - bound;
      point.emplace(s, Scalar(v));
    }
    std::vector<std::vector<Scalar>> m(jac.size(),
                                       std::vector<Scalar>(chart.fiber_dim()));
    bool ok = true;
    for (std::size_t i = 0; ok && i < jac.size(); ++i)
      for (std::size_t j = 0; ok && j < chart.fiber_dim(); ++j) {
        auto v = jac[i][j].evaluate_opt(point);
        if (!v) ok = false;
        else m[i][j] = *v;
      }
    if (!ok) continue;
    any_valid = true;
    best = std::max(best, scalar_rank(std::move(m)));
  }
  if (!any_valid) raise(errc::no_valid_point, "all trial points hit a denominator");
  return best;
}

RationalFunction specialize_integral(const RationalFunction& h,
                                     const std::map<Symbol, Scalar>& q) {
  std::map<Symbol, RationalFunction> sigma;
  for (const auto& [s, v] : q) sigma.emplace(s, RationalFunction(v));
  return h.substitute(sigma);
}

bool in_span(const std::vector<RationalFunction>& basis, const RationalFunction& h,
             const std::vector<Symbol>& main_vars) {
  std::set<Symbol> mains(main_vars.begin(), main_vars.end());
  Polynomial common(Scalar(1));
  auto fold_den = [&](const RationalFunction& f) {
    if (f.is_zero()) return;
    Polynomial g = Polynomial::gcd(common, f.den());
    common = common * Polynomial::exact_div(f.den(), g);
  };
  for (const auto& b : basis) fold_den(b);
  fold_den(h);

  auto to_vec = [&](const RationalFunction& f) {
    Polynomial cleared = f.num() * Polynomial::exact_div(common, f.den());
    return vectorize(cleared, mains);
  };

  RowSpace space;
  for (const auto& b : basis) space.insert(to_vec(b));
  return space.reduce(to_vec(h)).empty();
}

} // namespace jetgal
