#ifndef JETGAL_DIFFERENTIAL_FORM_HPP
#define JETGAL_DIFFERENTIAL_FORM_HPP

#include <map>

#include "jetgal/vector_field.hpp"

namespace jetgal {

// Fiberwise differential form: antisymmetric combination of fiber coordinate
// differentials with rational coefficients, indices strictly increasing.
class DifferentialForm {
public:
  using Index = std::vector<std::size_t>; // strictly increasing fiber indices

  DifferentialForm() : degree_(0) {}
  DifferentialForm(Chart chart, unsigned degree);

  static DifferentialForm function(const Chart& chart, RationalFunction f);
  static DifferentialForm coordinate(const Chart& chart, const Symbol& fiber_sym);

  const Chart& chart() const { return chart_; }
  unsigned degree() const { return degree_; }
  const std::map<Index, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coefficient(const Index& idx) const;

  // adds c * dy_{i1} ^ ... ^ dy_{ig} for an arbitrary index tuple, with
  // sign normalization; repeated indices contribute nothing
  void add_term(const std::vector<std::size_t>& idx, const RationalFunction& c);

  DifferentialForm operator-() const;
  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
  DifferentialForm scaled(const RationalFunction& c) const;

  bool operator==(const DifferentialForm& o) const {
    return chart_ == o.chart_ && degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

private:
  Chart chart_;
  unsigned degree_;
  std::map<Index, RationalFunction> terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_derivative(const DifferentialForm& w);
DifferentialForm interior_product(const VectorField& x, const DifferentialForm& w);

// Cartan formula i_X dw + d i_X w
DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& w);

// unique c with L_X dvol = c * dvol, for a nonzero top-degree form
RationalFunction divergence(const VectorField& x, const DifferentialForm& dvol);

} // namespace jetgal

#endif
