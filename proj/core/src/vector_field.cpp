#include "jetgal/vector_field.hpp"

namespace jetgal {

VectorField::VectorField(Chart chart, std::vector<RationalFunction> coeffs)
    : chart_(std::move(chart)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != chart_.fiber_dim())
    raise(errc::invalid_argument, "one coefficient per fiber coordinate required");
  for (const auto& c : coeffs_)
    for (const auto& s : c.symbols())
      if (!chart_.contains(s))
        raise(errc::unknown_symbol, "coefficient uses '" + s.name() + "' outside the chart");
}

VectorField VectorField::zero(const Chart& chart) {
  return VectorField(chart, std::vector<RationalFunction>(chart.fiber_dim()));
}

const RationalFunction& VectorField::coeff(const Symbol& s) const {
  auto idx = chart_.fiber_index(s);
  if (!idx) raise(errc::unknown_symbol, "'" + s.name() + "' is not a fiber coordinate");
  return coeffs_[*idx];
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  for (const auto& s : f.symbols())
    if (!chart_.contains(s))
      raise(errc::unknown_symbol, "'" + s.name() + "' is not on the chart");
  RationalFunction acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    RationalFunction df = f.derivative(chart_.fiber(i));
    if (df.is_zero()) continue;
    acc += coeffs_[i] * df;
  }
  return acc;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.chart_ != b.chart_) raise(errc::chart_mismatch, "adding fields on different charts");
  std::vector<RationalFunction> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return VectorField(a.chart_, std::move(c));
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField VectorField::scaled(const RationalFunction& c) const {
  std::vector<RationalFunction> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return VectorField(chart_, std::move(out));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.chart() != y.chart())
    raise(errc::chart_mismatch, "bracket of fields on different charts");
  std::vector<RationalFunction> c(x.chart().fiber_dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = x.apply(y.coeff(i)) - y.apply(x.coeff(i));
  return VectorField(x.chart(), std::move(c));
}

VectorField hamiltonian_field(const RationalFunction& h, const Chart& chart) {
  if (chart.fiber_dim() != 3)
    raise(errc::chart_mismatch, "hamiltonian field needs a 3-dimensional fiber chart");
  const Symbol& u = chart.fiber(1);
  const Symbol& v = chart.fiber(2);
  std::vector<RationalFunction> c(3);
  c[0] = RationalFunction(Scalar(1));
  c[1] = h.derivative(v);
  c[2] = -h.derivative(u);
  return VectorField(chart, std::move(c));
}

} // namespace jetgal
