#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetgal/expr.hpp"
#include "jetgal/painleve.hpp"
#include "test_util.hpp"

using namespace jetgal;

namespace {

VectorField parse_field(const Chart& chart, const std::vector<std::string>& exprs) {
  expr::ParseContext ctx{chart, false};
  std::vector<RationalFunction> coeffs;
  for (const auto& e : exprs) coeffs.push_back(expr::parse_rational(e, ctx));
  return VectorField(chart, std::move(coeffs));
}

RationalFunction jet_rf(const JetContext& ctx, const std::string& text) {
  expr::ParseContext pctx{ctx.base(), true};
  return expr::parse_rational(text, pctx);
}

} // namespace

TEST_CASE("jet ring variables") {
  JetContext c1(Chart({"u"}, {}), 2);
  std::vector<Symbol> vars = c1.ring_vars();
  REQUIRE(vars.size() == 3);
  CHECK(vars[0].name() == "u");
  CHECK(vars[1].name() == "u[1]");
  CHECK(vars[2].name() == "u[2]");

  JetContext c2(Chart({"y1", "y2"}, {}), 1);
  CHECK(c2.ring_vars().size() == 6); // 2 base + 4 jets

  JetContext c3(Chart({"y1", "y2"}, {"z1"}), 0);
  std::vector<Symbol> v3 = c3.ring_vars();
  REQUIRE(v3.size() == 3);
  CHECK(v3[0].name() == "y1");
  CHECK(v3[1].name() == "y2");
  CHECK(v3[2].name() == "z1");

  // the Jacobian element det(y_i^{1_j})
  Polynomial jac = c2.jacobian_det();
  expr::ParseContext pctx{c2.base(), true};
  CHECK(RationalFunction(jac) ==
        expr::parse_rational("y1[1,0]*y2[0,1] - y1[0,1]*y2[1,0]", pctx));
}

TEST_CASE("total derivative") {
  JetContext ctx(Chart({"y1", "y2"}, {"z1"}), 1);
  // d_1(y1 * y2^{(0,1)}) = y1^{(1,0)} y2^{(0,1)} + y1 y2^{(1,1)}
  RationalFunction f = jet_rf(ctx, "y1*y2[0,1]");
  CHECK(total_derivative(ctx, f, 0) ==
        jet_rf(ctx, "y1[1,0]*y2[0,1] + y1*y2[1,1]"));
  // parameters die
  CHECK(total_derivative(ctx, jet_rf(ctx, "z1"), 1).is_zero());
  // mixed derivatives commute on random jet polynomials
  testutil::Rng rng(52);
  std::vector<Symbol> vars = ctx.ring_vars();
  for (int i = 0; i < 15; ++i) {
    RationalFunction g{testutil::random_poly(rng, vars, 2, 4)};
    CHECK(total_derivative(ctx, total_derivative(ctx, g, 0), 1) ==
          total_derivative(ctx, total_derivative(ctx, g, 1), 0));
  }
}

TEST_CASE("prolongation of a linear field") {
  // X = d/dt + t x d/dx on fiber coords (t, x): the order-1 coefficient on
  // x^{1_k} is t^{1_k} x + t x^{1_k}
  Chart chart({"t", "x"}, {});
  VectorField x = parse_field(chart, {"1", "t*x"});
  JetContext ctx(chart, 1);
  VectorField r1 = prolong_frame(x, ctx);
  const Chart& jc = r1.chart();
  REQUIRE(jc.fiber_dim() == 6);
  CHECK(r1.coeff(Symbol("t[1,0]")).is_zero());
  CHECK(r1.coeff(Symbol("t[0,1]")).is_zero());
  CHECK(r1.coeff(Symbol("x[1,0]")) == jet_rf(ctx, "t[1,0]*x + t*x[1,0]"));
  CHECK(r1.coeff(Symbol("x[0,1]")) == jet_rf(ctx, "t[0,1]*x + t*x[0,1]"));
}

TEST_CASE("order zero prolongation is the field itself") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  JetContext ctx(x2.chart(), 0);
  VectorField r0 = prolong_frame(x2, ctx);
  CHECK(r0.chart() == x2.chart());
  CHECK(r0.coeffs() == x2.coeffs());
}

TEST_CASE("jacobian determinant is a first integral of R_1 X_II") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  JetContext ctx(x2.chart(), 1);
  VectorField r1 = prolong_frame(x2, ctx);
  RationalFunction det{ctx.jacobian_det()};
  CHECK(r1.apply(det).is_zero());
}

TEST_CASE("commutation with total derivatives") {
  // R_{k+1}X o d_i = d_i o R_kX on random jet polynomials
  const VectorField& x2 = painleve::field(painleve::Id::II);
  testutil::Rng rng(77);
  for (unsigned k = 0; k <= 1; ++k) {
    JetContext ck(x2.chart(), k);
    JetContext ck1(x2.chart(), k + 1);
    VectorField rk = prolong_frame(x2, ck);
    VectorField rk1 = prolong_frame(x2, ck1);
    std::vector<Symbol> vars = ck.ring_vars();
    for (int trial = 0; trial < 5; ++trial) {
      RationalFunction f{testutil::random_poly(rng, vars, 2, 4)};
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rk1.apply(total_derivative(ck, f, i)) ==
              total_derivative(ck1, rk.apply(f), i));
      }
    }
  }
}

TEST_CASE("prolongation is compatible with the projections") {
  // restricted to order-(k-1) variables, R_k X equals R_{k-1} X
  Chart chart({"x", "u", "v"}, {"q"});
  VectorField x = parse_field(chart, {"1", "v", "q*u^2 + x"});
  JetContext c1(chart, 1), c2(chart, 2);
  VectorField r1 = prolong_frame(x, c1);
  VectorField r2 = prolong_frame(x, c2);
  Chart low = c1.as_chart();
  for (const auto& s : low.fiber())
    CHECK(r2.coeff(s) == r1.coeff(s));
}

TEST_CASE("dimension formulas") {
  for (unsigned k = 0; k <= 6; ++k)
    CHECK(aut_dim(2, 0, k) == 2 * binomial(k + 2, 2) + 2);
  CHECK(gamma_dim(1, 2) == 2);
  CHECK(frame_dim(2, 0, 1) == 6);
  // frame_dim counts the jet-ring fiber variables plus parameters
  for (unsigned k = 0; k <= 3; ++k) {
    JetContext ctx(Chart({"x", "u"}, {"q"}), k);
    CHECK(frame_dim(2, 1, k) == (long)ctx.ring_vars().size());
  }
}

TEST_CASE("groupoid dimension estimate") {
  JetContext ctx(Chart({"x", "u", "v"}, {}), 1);
  // rank 0
  GroupoidDimEstimate e0 = groupoid_dim_upper(ctx, 0);
  CHECK(e0.v_upper == frame_dim(3, 0, 1));
  CHECK(e0.gal_dim_upper == 2 * frame_dim(3, 0, 1) - gamma_dim(3, 1));
  // the P_II case:{x^{1_i}, det} has rank 4
  GroupoidDimEstimate e4 = groupoid_dim_upper(ctx, 4);
  CHECK(frame_dim(3, 0, 1) == 12);
  CHECK(e4.v_upper == 8);
  CHECK(e4.gal_dim_upper == 11);
  // full rank leaves only the base dimension
  GroupoidDimEstimate ef = groupoid_dim_upper(ctx, (std::size_t)frame_dim(3, 0, 1));
  CHECK(ef.gal_dim_upper == 3);
  CHECK_THROWS_AS(groupoid_dim_upper(ctx, 13), error);
}

TEST_CASE("invariant field to first integrals") {
  // m = 1: Y = b(u) d/du gives H = b(u)/u[1]
  Chart cu({"u"}, {});
  VectorField y = parse_field(cu, {"u^2 + 1"});
  auto h = invariant_field_to_integrals(y);
  REQUIRE(h.size() == 1);
  JetContext ctx(cu, 1);
  CHECK(h[0] == jet_rf(ctx, "(u^2 + 1)/u[1]"));

  CHECK(invariant_field_to_integrals(VectorField::zero(cu))[0].is_zero());

  // Y = X gives first integrals of R_1 X (for X_II)
  const VectorField& x2 = painleve::field(painleve::Id::II);
  VectorField r1 = prolong_frame(x2, JetContext(x2.chart(), 1));
  for (const auto& hi : invariant_field_to_integrals(x2))
    CHECK(r1.apply(hi).is_zero());
}

TEST_CASE("invariant form to first integrals") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  const Chart& chart = x2.chart();
  JetContext ctx(chart, 1);
  VectorField r1 = prolong_frame(x2, ctx);

  // omega = dx gives H_i = x^{1_i}
  auto h = invariant_form_to_integrals(DifferentialForm::coordinate(chart, Symbol("x")));
  REQUIRE(h.size() == 3);
  CHECK(h[0] == jet_rf(ctx, "x[1,0,0]"));
  CHECK(h[1] == jet_rf(ctx, "x[0,1,0]"));
  CHECK(h[2] == jet_rf(ctx, "x[0,0,1]"));
  for (const auto& hi : h) CHECK(r1.apply(hi).is_zero());

  // dvol = dx^du^dv gives det(y^1); it is L_X-invariant, so a first integral
  DifferentialForm vol(chart, 3);
  vol.add_term({0, 1, 2}, RationalFunction(Scalar(1)));
  RationalFunction hd = invariant_topform_to_integral(vol);
  CHECK(hd == RationalFunction(ctx.jacobian_det()));
  CHECK(r1.apply(hd).is_zero());

  // omega = du on a 1-dimensional chart gives u[1]
  Chart cu({"u"}, {});
  auto h1 = invariant_form_to_integrals(DifferentialForm::coordinate(cu, Symbol("u")));
  REQUIRE(h1.size() == 1);
  CHECK(h1[0] == RationalFunction::variable(Symbol("u[1]")));

  CHECK_THROWS_AS(invariant_form_to_integrals(vol), error);
  CHECK_THROWS_AS(invariant_topform_to_integral(
                      DifferentialForm::coordinate(chart, Symbol("x"))),
                  error);
}

TEST_CASE("invariance transfers to the frame bundle") {
  // if L_X Y = 0 then the H_i from Y are first integrals of R_1 X
  Chart chart({"x", "u", "v"}, {});
  VectorField x = parse_field(chart, {"1", "v", "6*u^2 + x"});
  JetContext ctx(chart, 1);
  VectorField r1 = prolong_frame(x, ctx);
  // X itself is X-invariant
  for (const auto& hi : invariant_field_to_integrals(x))
    CHECK(r1.apply(hi).is_zero());
  // dx is X-invariant
  for (const auto& hi :
       invariant_form_to_integrals(DifferentialForm::coordinate(chart, Symbol("x"))))
    CHECK(r1.apply(hi).is_zero());
}
