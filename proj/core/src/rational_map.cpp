#include "jetgal/rational_map.hpp"

namespace jetgal {

RationalMap::RationalMap(Chart source, Chart target,
                         std::map<Symbol, RationalFunction> components)
    : source_(std::move(source)), target_(std::move(target)),
      components_(std::move(components)) {
  for (const auto& s : target_.all_symbols())
    if (components_.find(s) == components_.end())
      raise(errc::invalid_argument, "no component for target symbol '" + s.name() + "'");
  for (const auto& [s, c] : components_) {
    if (!target_.contains(s))
      raise(errc::unknown_symbol, "component for '" + s.name() + "' outside the target chart");
    for (const auto& sym : c.symbols())
      if (!source_.contains(sym))
        raise(errc::unknown_symbol, "component uses '" + sym.name() + "' outside the source chart");
  }
}

RationalMap RationalMap::identity(const Chart& chart) {
  std::map<Symbol, RationalFunction> comps;
  for (const auto& s : chart.all_symbols()) comps.emplace(s, RationalFunction::variable(s));
  return RationalMap(chart, chart, std::move(comps));
}

const RationalFunction& RationalMap::component(const Symbol& target_sym) const {
  auto it = components_.find(target_sym);
  if (it == components_.end())
    raise(errc::unknown_symbol, "no component for '" + target_sym.name() + "'");
  return it->second;
}

Matrix RationalMap::fiber_jacobian() const {
  Matrix j(target_.fiber_dim(), source_.fiber_dim());
  for (std::size_t i = 0; i < target_.fiber_dim(); ++i) {
    const RationalFunction& c = component(target_.fiber(i));
    for (std::size_t k = 0; k < source_.fiber_dim(); ++k)
      j.at(i, k) = c.derivative(source_.fiber(k));
  }
  return j;
}

RationalMap RationalMap::compose_after(const RationalMap& inner) const {
  if (inner.target_ != source_)
    raise(errc::chart_mismatch, "map composition across mismatched charts");
  std::map<Symbol, RationalFunction> comps;
  for (const auto& [s, c] : components_)
    comps.emplace(s, c.substitute(inner.components_));
  return RationalMap(inner.source_, target_, std::move(comps));
}

DifferentialForm pullback(const RationalMap& phi, const DifferentialForm& w) {
  if (w.chart() != phi.target())
    raise(errc::chart_mismatch, "pullback of a form living on another chart");
  const Chart& src = phi.source();
  // differentials of the fiber components in source fiber directions
  std::vector<DifferentialForm> dphi;
  dphi.reserve(phi.target().fiber_dim());
  for (std::size_t i = 0; i < phi.target().fiber_dim(); ++i) {
    DifferentialForm df(src, 1);
    const RationalFunction& c = phi.component(phi.target().fiber(i));
    for (std::size_t k = 0; k < src.fiber_dim(); ++k)
      df.add_term({k}, c.derivative(src.fiber(k)));
    dphi.push_back(std::move(df));
  }
  DifferentialForm out(src, std::min<unsigned>(w.degree(), (unsigned)src.fiber_dim()));
  bool first = true;
  for (const auto& [idx, coeff] : w.terms()) {
    RationalFunction c = coeff.substitute(phi.components());
    DifferentialForm part = DifferentialForm::function(src, c);
    for (std::size_t i : idx) part = wedge(part, dphi[i]);
    if (first) {
      out = std::move(part);
      first = false;
    } else {
      out = out + part;
    }
  }
  return out;
}

VectorField pullback(const RationalMap& phi, const VectorField& x) {
  if (x.chart() != phi.target())
    raise(errc::chart_mismatch, "pullback of a field living on another chart");
  if (phi.source().fiber_dim() != phi.target().fiber_dim())
    raise(errc::singular_jacobian, "fiber Jacobian is not square");
  Matrix j = phi.fiber_jacobian();
  RationalFunction d = j.det();
  if (d.is_zero()) raise(errc::singular_jacobian, "fiber Jacobian is singular");
  Matrix inv = j.adjugate().scaled(d.inverse());
  const std::size_t m = phi.source().fiber_dim();
  std::vector<RationalFunction> xphi(m);
  for (std::size_t i = 0; i < m; ++i)
    xphi[i] = x.coeff(i).substitute(phi.components());
  std::vector<RationalFunction> out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (inv.at(i, k).is_zero() || xphi[k].is_zero()) continue;
      out[i] += inv.at(i, k) * xphi[k];
    }
  return VectorField(phi.source(), std::move(out));
}

} // namespace jetgal
