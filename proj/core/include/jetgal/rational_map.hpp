#ifndef JETGAL_RATIONAL_MAP_HPP
#define JETGAL_RATIONAL_MAP_HPP

#include "jetgal/differential_form.hpp"
#include "jetgal/matrix.hpp"

namespace jetgal {

// Rational map between charts, fibered over the parameters: every target
// symbol (fiber and parameter) gets a component over the source symbols.
class RationalMap {
public:
  RationalMap() = default;
  RationalMap(Chart source, Chart target, std::map<Symbol, RationalFunction> components);

  static RationalMap identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const RationalFunction& component(const Symbol& target_sym) const;
  const std::map<Symbol, RationalFunction>& components() const { return components_; }

  // Jacobian of the fiber components in the source fiber coordinates,
  // parameters held constant; rows = target fiber components, columns =
  // source fiber coordinates
  Matrix fiber_jacobian() const;

  RationalMap compose_after(const RationalMap& inner) const; // this o inner

private:
  Chart source_, target_;
  std::map<Symbol, RationalFunction> components_;
};

DifferentialForm pullback(const RationalMap& phi, const DifferentialForm& w);

// Y with Dphi . Y = X o phi; requires a square fiber Jacobian with nonzero
// determinant
VectorField pullback(const RationalMap& phi, const VectorField& x);

} // namespace jetgal

#endif
