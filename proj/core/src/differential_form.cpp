#include "jetgal/differential_form.hpp"

#include <algorithm>

namespace jetgal {

DifferentialForm::DifferentialForm(Chart chart, unsigned degree)
    : chart_(std::move(chart)), degree_(degree) {
  if (degree_ > chart_.fiber_dim())
    raise(errc::degree_overflow, "form degree exceeds the fiber dimension");
}

DifferentialForm DifferentialForm::function(const Chart& chart, RationalFunction f) {
  DifferentialForm w(chart, 0);
  if (!f.is_zero()) w.terms_.emplace(Index{}, std::move(f));
  return w;
}

DifferentialForm DifferentialForm::coordinate(const Chart& chart, const Symbol& fiber_sym) {
  auto idx = chart.fiber_index(fiber_sym);
  if (!idx) raise(errc::unknown_symbol, "'" + fiber_sym.name() + "' is not a fiber coordinate");
  DifferentialForm w(chart, 1);
  w.terms_.emplace(Index{*idx}, RationalFunction(Scalar(1)));
  return w;
}

RationalFunction DifferentialForm::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void DifferentialForm::add_term(const std::vector<std::size_t>& idx, const RationalFunction& c) {
  if (idx.size() != degree_) raise(errc::degree_mismatch, "index tuple has wrong length");
  if (c.is_zero()) return;
  Index sorted = idx;
  int sign = 1;
  // insertion sort tracking the permutation parity
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i]) return;
  RationalFunction v = sign > 0 ? c : -c;
  auto it = terms_.find(sorted);
  if (it == terms_.end()) {
    terms_.emplace(std::move(sorted), std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r = *this;
  for (auto& [i, c] : r.terms_) c = -c;
  return r;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.chart_ != b.chart_) raise(errc::chart_mismatch, "adding forms on different charts");
  if (a.degree_ != b.degree_) raise(errc::degree_mismatch, "adding forms of different degree");
  DifferentialForm r = a;
  for (const auto& [i, c] : b.terms_) {
    auto it = r.terms_.find(i);
    if (it == r.terms_.end()) {
      r.terms_.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
  return a + (-b);
}

DifferentialForm DifferentialForm::scaled(const RationalFunction& c) const {
  DifferentialForm r(chart_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [i, v] : terms_) r.terms_.emplace(i, v * c);
  return r;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.chart() != b.chart()) raise(errc::chart_mismatch, "wedge of forms on different charts");
  unsigned degree = a.degree() + b.degree();
  if (degree > a.chart().fiber_dim())
    // no nonzero forms above the fiber dimension
    return DifferentialForm(a.chart(), (unsigned)a.chart().fiber_dim());
  DifferentialForm r(a.chart(), degree);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<std::size_t> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(idx, ca * cb);
    }
  return r;
}

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  const Chart& chart = w.chart();
  if (w.degree() + 1 > chart.fiber_dim())
    return DifferentialForm(chart, (unsigned)chart.fiber_dim());
  DifferentialForm r(chart, w.degree() + 1);
  for (const auto& [idx, c] : w.terms()) {
    for (std::size_t i = 0; i < chart.fiber_dim(); ++i) {
      RationalFunction dc = c.derivative(chart.fiber(i));
      if (dc.is_zero()) continue;
      std::vector<std::size_t> full{i};
      full.insert(full.end(), idx.begin(), idx.end());
      r.add_term(full, dc);
    }
  }
  return r;
}

DifferentialForm interior_product(const VectorField& x, const DifferentialForm& w) {
  if (x.chart() != w.chart())
    raise(errc::chart_mismatch, "contraction of a field with a form on another chart");
  if (w.degree() == 0) return DifferentialForm(w.chart(), 0);
  DifferentialForm r(w.chart(), w.degree() - 1);
  for (const auto& [idx, c] : w.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const RationalFunction& xk = x.coeff(idx[k]);
      if (xk.is_zero()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != k) rest.push_back(idx[j]);
      RationalFunction v = xk * c;
      r.add_term(rest, (k % 2 == 0) ? v : -v);
    }
  }
  return r;
}

DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& w) {
  if (x.chart() != w.chart())
    raise(errc::chart_mismatch, "Lie derivative across charts");
  if (w.degree() == 0) {
    RationalFunction f = w.terms().empty() ? RationalFunction()
                                           : w.terms().begin()->second;
    return DifferentialForm::function(w.chart(), x.apply(f));
  }
  if (w.degree() == w.chart().fiber_dim()) // d of a top form is zero
    return exterior_derivative(interior_product(x, w));
  return interior_product(x, exterior_derivative(w)) +
         exterior_derivative(interior_product(x, w));
}

RationalFunction divergence(const VectorField& x, const DifferentialForm& dvol) {
  if (dvol.degree() != dvol.chart().fiber_dim())
    raise(errc::invalid_argument, "divergence needs a top-degree form");
  if (dvol.is_zero()) raise(errc::zero_form, "divergence against the zero form");
  DifferentialForm lw = lie_derivative(x, dvol);
  const RationalFunction& rho = dvol.terms().begin()->second;
  if (lw.is_zero()) return RationalFunction();
  return lw.terms().begin()->second / rho;
}

} // namespace jetgal
