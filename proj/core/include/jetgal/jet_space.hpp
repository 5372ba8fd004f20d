#ifndef JETGAL_JET_SPACE_HPP
#define JETGAL_JET_SPACE_HPP

#include <optional>

#include "jetgal/differential_form.hpp"
#include "jetgal/matrix.hpp"

namespace jetgal {

long binomial(long n, long k);

// alpha in N^m
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}
  static MultiIndex zero(std::size_t m) { return MultiIndex(std::vector<unsigned>(m, 0)); }
  static MultiIndex unit(std::size_t m, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& entries() const { return e_; }

  unsigned weight() const;
  bool is_zero() const { return weight() == 0; }
  MultiIndex plus_unit(std::size_t i) const;

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator<(const MultiIndex& o) const { return e_ < o.e_; }

  // indices of a fixed weight, descending lexicographic: (w,0,..), ...
  static std::vector<MultiIndex> of_weight(std::size_t m, unsigned w);

private:
  std::vector<unsigned> e_;
};

// Order-k frame coordinates over a chart: the base fiber coordinates y_i
// (identified with y_i^0), the parameters, and jet symbols y_i^alpha for
// 1 <= |alpha| <= k, named like "u[1,0,2]".
class JetContext {
public:
  JetContext(Chart base, unsigned order);

  const Chart& base() const { return base_; }
  unsigned order() const { return order_; }
  std::size_t m() const { return base_.fiber_dim(); }
  std::size_t d() const { return base_.param_dim(); }

  static std::string jet_name(const Symbol& base_sym, const MultiIndex& alpha);
  Symbol jet_symbol(std::size_t i, const MultiIndex& alpha) const;

  // inverse of jet_symbol, for any order; nullopt for parameters/foreign symbols
  std::optional<std::pair<std::size_t, MultiIndex>> decode(const Symbol& s) const;

  // fiber coords, then parameters, then jets by weight
  std::vector<Symbol> ring_vars() const;
  // the same without parameters; these are the fiber coordinates of as_chart()
  std::vector<Symbol> jet_fiber_symbols() const;
  Chart as_chart() const;

  // (y^1)_{j,i} = y_j^{1_i}: row = component, column = direction
  Matrix order1_matrix() const;
  Polynomial jacobian_det() const;

private:
  Chart base_;
  unsigned order_;
};

// the derivation with d_i y_j^alpha = y_j^{alpha + 1_i}, d_i(parameter) = 0.
// The result lives one order higher than its input.
RationalFunction total_derivative(const JetContext& ctx, const RationalFunction& f,
                                  std::size_t dir);

// R_k X: coefficient on y_j^alpha is d^alpha(X_j); parameters are killed.
// Satisfies R_{k+1}X o d_i = d_i o R_kX.
VectorField prolong_frame(const VectorField& x, const JetContext& ctx);

long frame_dim(std::size_t m, std::size_t d, unsigned k);
long gamma_dim(std::size_t m, unsigned k);
long aut_dim(std::size_t m, std::size_t d, unsigned k);

struct GroupoidDimEstimate {
  unsigned k = 0;
  std::size_t rank = 0;
  long v_upper = 0;
  long gal_dim_upper = 0;
};

GroupoidDimEstimate groupoid_dim_upper(const JetContext& ctx, std::size_t rank);

// coordinates of j_0(r^*Y): H = (y^1)^{-1} . Y(y^0)
std::vector<RationalFunction> invariant_field_to_integrals(const VectorField& y);
// for w = sum a_j dy_j: H_i = sum_j a_j(y^0) y_j^{1_i}
std::vector<RationalFunction> invariant_form_to_integrals(const DifferentialForm& w);
// for f dy_1^...^dy_m: H = f(y^0) det(y_j^{1_i})
RationalFunction invariant_topform_to_integral(const DifferentialForm& dvol);

} // namespace jetgal

#endif
