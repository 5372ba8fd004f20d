#ifndef JETGAL_VECTOR_FIELD_HPP
#define JETGAL_VECTOR_FIELD_HPP

#include "jetgal/chart.hpp"
#include "jetgal/rational_function.hpp"

namespace jetgal {

// Derivation tangent to the fibers of a chart: one rational coefficient per
// fiber coordinate, none on parameters.
class VectorField {
public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<RationalFunction> coeffs);
  static VectorField zero(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(std::size_t i) const { return coeffs_[i]; }
  const RationalFunction& coeff(const Symbol& s) const;

  bool is_zero() const;

  // X(f) = sum_i X_i df/dy_i; f must live on the chart
  RationalFunction apply(const RationalFunction& f) const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  VectorField scaled(const RationalFunction& c) const;

  bool operator==(const VectorField& o) const {
    return chart_ == o.chart_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const VectorField& o) const { return !(*this == o); }

private:
  Chart chart_;
  std::vector<RationalFunction> coeffs_;
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);

// the field of u'' = dH/d(...) on a 3-dimensional fiber chart (time, u, v):
// d/dx + H_v d/du - H_u d/dv
VectorField hamiltonian_field(const RationalFunction& h, const Chart& chart);

} // namespace jetgal

#endif
