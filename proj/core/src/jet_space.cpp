#include "jetgal/jet_space.hpp"

#include <sstream>

#include "jetgal/differential_form.hpp"

namespace jetgal {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiIndex MultiIndex::unit(std::size_t m, std::size_t i) {
  std::vector<unsigned> e(m, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::weight() const {
  unsigned w = 0;
  for (unsigned x : e_) w += x;
  return w;
}

MultiIndex MultiIndex::plus_unit(std::size_t i) const {
  std::vector<unsigned> e = e_;
  e.at(i) += 1;
  return MultiIndex(std::move(e));
}

std::vector<MultiIndex> MultiIndex::of_weight(std::size_t m, unsigned w) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(m, 0);
  // descending lexicographic enumeration
  auto rec = [&](auto&& self, std::size_t pos, unsigned rest) -> void {
    if (pos + 1 == m) {
      cur[pos] = rest;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (unsigned e = rest + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, rest - e);
    }
  };
  if (m == 0) return out;
  rec(rec, 0, w);
  return out;
}

JetContext::JetContext(Chart base, unsigned order)
    : base_(std::move(base)), order_(order) {}

std::string JetContext::jet_name(const Symbol& base_sym, const MultiIndex& alpha) {
  std::ostringstream os;
  os << base_sym.name() << '[';
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) os << ',';
    os << alpha[i];
  }
  os << ']';
  return os.str();
}

Symbol JetContext::jet_symbol(std::size_t i, const MultiIndex& alpha) const {
  if (alpha.size() != m()) raise(errc::invalid_argument, "multi-index length mismatch");
  if (alpha.is_zero()) return base_.fiber(i);
  return Symbol(jet_name(base_.fiber(i), alpha), SymbolKind::jet);
}

std::optional<std::pair<std::size_t, MultiIndex>> JetContext::decode(const Symbol& s) const {
  if (auto idx = base_.fiber_index(s)) return std::make_pair(*idx, MultiIndex::zero(m()));
  const std::string& n = s.name();
  auto bracket = n.find('[');
  if (bracket == std::string::npos || n.back() != ']') return std::nullopt;
  Symbol base_sym(n.substr(0, bracket));
  auto idx = base_.fiber_index(base_sym);
  if (!idx) return std::nullopt;
  std::vector<unsigned> e;
  unsigned cur = 0;
  bool have = false;
  for (std::size_t p = bracket + 1; p < n.size(); ++p) {
    char c = n[p];
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + unsigned(c - '0');
      have = true;
    } else if (c == ',' || c == ']') {
      if (!have) return std::nullopt;
      e.push_back(cur);
      cur = 0;
      have = false;
    } else {
      return std::nullopt;
    }
  }
  if (e.size() != m()) return std::nullopt;
  return std::make_pair(*idx, MultiIndex(std::move(e)));
}

std::vector<Symbol> JetContext::ring_vars() const {
  std::vector<Symbol> out = base_.fiber();
  for (const auto& p : base_.params()) out.push_back(p);
  for (unsigned w = 1; w <= order_; ++w)
    for (std::size_t i = 0; i < m(); ++i)
      for (const auto& a : MultiIndex::of_weight(m(), w))
        out.push_back(jet_symbol(i, a));
  return out;
}

std::vector<Symbol> JetContext::jet_fiber_symbols() const {
  std::vector<Symbol> out = base_.fiber();
  for (unsigned w = 1; w <= order_; ++w)
    for (std::size_t i = 0; i < m(); ++i)
      for (const auto& a : MultiIndex::of_weight(m(), w))
        out.push_back(jet_symbol(i, a));
  return out;
}

Chart JetContext::as_chart() const {
  return Chart::from_symbols(jet_fiber_symbols(), base_.params());
}

Matrix JetContext::order1_matrix() const {
  const std::size_t n = m();
  Matrix y1(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      y1.at(j, i) = RationalFunction::variable(jet_symbol(j, MultiIndex::unit(n, i)));
  return y1;
}

Polynomial JetContext::jacobian_det() const {
  RationalFunction d = order1_matrix().det();
  return d.num(); // determinant of a symbol matrix is a polynomial
}

RationalFunction total_derivative(const JetContext& ctx, const RationalFunction& f,
                                  std::size_t dir) {
  if (dir >= ctx.m()) raise(errc::invalid_argument, "derivative direction out of range");
  RationalFunction acc;
  for (const auto& s : f.symbols()) {
    if (auto decoded = ctx.decode(s)) {
      RationalFunction df = f.derivative(s);
      if (df.is_zero()) continue;
      Symbol up = ctx.jet_symbol(decoded->first, decoded->second.plus_unit(dir));
      acc += df * RationalFunction::variable(up);
    } else {
      bool is_param = false;
      for (const auto& p : ctx.base().params())
        if (p == s) { is_param = true; break; }
      if (!is_param)
        raise(errc::unknown_symbol, "'" + s.name() + "' is not a jet-ring variable");
      // parameters are killed
    }
  }
  return acc;
}

VectorField prolong_frame(const VectorField& x, const JetContext& ctx) {
  if (x.chart() != ctx.base())
    raise(errc::chart_mismatch, "field does not live on the context's base chart");
  const std::size_t n = ctx.m();
  // cache of d^alpha(X_j) keyed by (j, alpha), built by recursion on weight
  std::map<std::pair<std::size_t, MultiIndex>, RationalFunction> cache;
  for (std::size_t j = 0; j < n; ++j)
    cache.emplace(std::make_pair(j, MultiIndex::zero(n)), x.coeff(j));
  for (unsigned w = 1; w <= ctx.order(); ++w) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& a : MultiIndex::of_weight(n, w)) {
        std::size_t i = 0;
        while (a[i] == 0) ++i;
        std::vector<unsigned> lower = a.entries();
        lower[i] -= 1;
        const RationalFunction& prev = cache.at(std::make_pair(j, MultiIndex(lower)));
        cache.emplace(std::make_pair(j, a), total_derivative(ctx, prev, i));
      }
    }
  }
  Chart jc = ctx.as_chart();
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(jc.fiber_dim());
  for (std::size_t j = 0; j < n; ++j) coeffs.push_back(x.coeff(j));
  for (unsigned w = 1; w <= ctx.order(); ++w)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& a : MultiIndex::of_weight(n, w))
        coeffs.push_back(cache.at(std::make_pair(j, a)));
  return VectorField(jc, std::move(coeffs));
}

long frame_dim(std::size_t m, std::size_t d, unsigned k) {
  return long(m + d) + long(m) * (binomial(long(m + k), long(m)) - 1);
}

long gamma_dim(std::size_t m, unsigned k) {
  return long(m) * (binomial(long(m + k), long(m)) - 1);
}

long aut_dim(std::size_t m, std::size_t d, unsigned k) {
  return 2 * long(m + d) + long(m) * (binomial(long(m + k), long(m)) - 1);
}

GroupoidDimEstimate groupoid_dim_upper(const JetContext& ctx, std::size_t rank) {
  long fd = frame_dim(ctx.m(), ctx.d(), ctx.order());
  if (long(rank) > fd)
    raise(errc::rank_out_of_range, "rank exceeds the frame dimension");
  GroupoidDimEstimate est;
  est.k = ctx.order();
  est.rank = rank;
  est.v_upper = fd - long(rank);
  est.gal_dim_upper = fd + est.v_upper - gamma_dim(ctx.m(), ctx.order());
  return est;
}

std::vector<RationalFunction> invariant_field_to_integrals(const VectorField& y) {
  JetContext ctx(y.chart(), 1);
  const std::size_t n = ctx.m();
  Matrix y1 = ctx.order1_matrix();
  Matrix inv = y1.adjugate().scaled(y1.det().inverse());
  std::vector<RationalFunction> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inv.at(i, j).is_zero() || y.coeff(j).is_zero()) continue;
      h[i] += inv.at(i, j) * y.coeff(j);
    }
  return h;
}

std::vector<RationalFunction> invariant_form_to_integrals(const DifferentialForm& w) {
  if (w.degree() != 1) raise(errc::degree_mismatch, "expected a 1-form");
  JetContext ctx(w.chart(), 1);
  const std::size_t n = ctx.m();
  std::vector<RationalFunction> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [idx, a] : w.terms())
      h[i] += a * RationalFunction::variable(ctx.jet_symbol(idx[0], MultiIndex::unit(n, i)));
  return h;
}

RationalFunction invariant_topform_to_integral(const DifferentialForm& dvol) {
  if (dvol.degree() != dvol.chart().fiber_dim())
    raise(errc::degree_mismatch, "expected a top-degree form");
  JetContext ctx(dvol.chart(), 1);
  if (dvol.is_zero()) return RationalFunction();
  return dvol.terms().begin()->second * RationalFunction(ctx.jacobian_det());
}

} // namespace jetgal
