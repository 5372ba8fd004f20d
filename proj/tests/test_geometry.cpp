#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetgal/expr.hpp"
#include "jetgal/painleve.hpp"
#include "jetgal/rational_map.hpp"
#include "test_util.hpp"

using namespace jetgal;

namespace {

Chart xuv() { return Chart({"x", "u", "v"}, {}); }

VectorField parse_field(const Chart& chart, const std::vector<std::string>& exprs) {
  expr::ParseContext ctx{chart, false};
  std::vector<RationalFunction> coeffs;
  for (const auto& e : exprs) coeffs.push_back(expr::parse_rational(e, ctx));
  return VectorField(chart, std::move(coeffs));
}

DifferentialForm volume(const Chart& chart) {
  DifferentialForm w(chart, (unsigned)chart.fiber_dim());
  std::vector<std::size_t> idx(chart.fiber_dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  w.add_term(idx, RationalFunction(Scalar(1)));
  return w;
}

// independent oracle: differentiate coefficients along X and transport the
// frame indices through dX
DifferentialForm lie_derivative_transport(const VectorField& x, const DifferentialForm& w) {
  const Chart& chart = x.chart();
  DifferentialForm out(chart, w.degree());
  for (const auto& [idx, a] : w.terms()) {
    out.add_term(idx, x.apply(a));
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const RationalFunction& xc = x.coeff(idx[p]);
      for (std::size_t l = 0; l < chart.fiber_dim(); ++l) {
        RationalFunction dxl = xc.derivative(chart.fiber(l));
        if (dxl.is_zero()) continue;
        std::vector<std::size_t> moved = idx;
        moved[p] = l;
        out.add_term(moved, a * dxl);
      }
    }
  }
  return out;
}

DifferentialForm random_form(testutil::Rng& rng, const Chart& chart, unsigned degree) {
  DifferentialForm w(chart, degree);
  std::vector<std::size_t> idx(degree);
  for (int t = 0; t < 3; ++t) {
    std::set<std::size_t> chosen;
    while (chosen.size() < degree)
      chosen.insert((std::size_t)rng.range(0, (long)chart.fiber_dim() - 1));
    idx.assign(chosen.begin(), chosen.end());
    w.add_term(idx, RationalFunction(testutil::random_poly(rng, chart.fiber(), 2, 3)));
  }
  return w;
}

VectorField random_field(testutil::Rng& rng, const Chart& chart, unsigned degree) {
  std::vector<RationalFunction> coeffs;
  for (std::size_t i = 0; i < chart.fiber_dim(); ++i)
    coeffs.push_back(RationalFunction(testutil::random_poly(rng, chart.fiber(), degree, 3)));
  return VectorField(chart, std::move(coeffs));
}

} // namespace

TEST_CASE("apply_field") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  expr::ParseContext ctx{x2.chart(), false};
  CHECK(x2.apply(expr::parse_rational("v", ctx)) ==
        expr::parse_rational("2*u^3 + x*u + alpha", ctx));
  CHECK(x2.apply(RationalFunction(Scalar(1))).is_zero());

  Chart chart = xuv();
  VectorField x = parse_field(chart, {"1", "v", "0"});
  expr::ParseContext c2{chart, false};
  CHECK(x.apply(expr::parse_rational("u - x*v", c2)).is_zero());
  CHECK_THROWS_AS(x.apply(RationalFunction::variable(Symbol("nope"))), error);
}

TEST_CASE("lie_bracket") {
  Chart chart({"u"}, {});
  expr::ParseContext ctx{chart, false};
  VectorField ddx = parse_field(chart, {"1"});
  VectorField u_ddx = parse_field(chart, {"u"});
  CHECK(lie_bracket(ddx, u_ddx) == ddx);
  CHECK(lie_bracket(u_ddx, u_ddx).is_zero());

  Chart c3 = xuv();
  VectorField a = parse_field(c3, {"1", "v", "0"});
  VectorField b = parse_field(c3, {"0", "0", "1"});
  VectorField expect = parse_field(c3, {"0", "-1", "0"});
  CHECK(lie_bracket(a, b) == expect);

  Chart other({"y"}, {});
  CHECK_THROWS_AS(lie_bracket(ddx, parse_field(other, {"1"})), error);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  testutil::Rng rng(17);
  Chart chart = xuv();
  for (int i = 0; i < 12; ++i) {
    VectorField a = random_field(rng, chart, 2);
    VectorField b = random_field(rng, chart, 2);
    VectorField c = random_field(rng, chart, 2);
    CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
    VectorField jacobi = lie_bracket(a, lie_bracket(b, c)) +
                         lie_bracket(b, lie_bracket(c, a)) +
                         lie_bracket(c, lie_bracket(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("exterior calculus basics") {
  Chart chart = xuv();
  expr::ParseContext ctx{chart, false};

  DifferentialForm xu = DifferentialForm::function(chart, expr::parse_rational("x*u", ctx));
  DifferentialForm d_xu = exterior_derivative(xu);
  DifferentialForm expect(chart, 1);
  expect.add_term({0}, expr::parse_rational("u", ctx));
  expect.add_term({1}, expr::parse_rational("x", ctx));
  CHECK(d_xu == expect);

  DifferentialForm du = DifferentialForm::coordinate(chart, Symbol("u"));
  CHECK(exterior_derivative(du).is_zero());

  // i_{X_F}(dx^du^dv) = du^dv - v dx^dv + F dx^du
  expr::ParseContext ctx2{Chart({"x", "u", "v"}, {"q"}), false};
  Chart cq({"x", "u", "v"}, {"q"});
  VectorField xf = parse_field(cq, {"1", "v", "q*u"});
  DifferentialForm got = interior_product(xf, volume(cq));
  DifferentialForm want(cq, 2);
  want.add_term({1, 2}, RationalFunction(Scalar(1)));
  want.add_term({0, 2}, -expr::parse_rational("v", ctx2));
  want.add_term({0, 1}, expr::parse_rational("q*u", ctx2));
  CHECK(got == want);
}

TEST_CASE("d o d = 0 and wedge properties on random forms") {
  testutil::Rng rng(23);
  Chart chart = xuv();
  for (int i = 0; i < 10; ++i) {
    for (unsigned g = 0; g + 1 < 3; ++g) {
      DifferentialForm w = random_form(rng, chart, g);
      CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
    DifferentialForm a = random_form(rng, chart, 1);
    DifferentialForm b = random_form(rng, chart, 1);
    DifferentialForm c = random_form(rng, chart, 1);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == -wedge(b, a));
  }
}

TEST_CASE("Cartan formula agrees with the transport rule") {
  testutil::Rng rng(31);
  Chart chart = xuv();
  for (int i = 0; i < 10; ++i) {
    VectorField x = random_field(rng, chart, 2);
    for (unsigned g = 0; g <= 3; ++g) {
      DifferentialForm w = random_form(rng, chart, g);
      CHECK(lie_derivative(x, w) == lie_derivative_transport(x, w));
    }
  }
}

TEST_CASE("lie derivative examples") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  CHECK(lie_derivative(x2, volume(x2.chart())).is_zero());

  // L_{X_F} dx = 0 for any F
  Chart cq({"x", "u", "v"}, {"q"});
  expr::ParseContext ctx{cq, false};
  VectorField xf = parse_field(cq, {"1", "v", "q*u^2/(u - 1)"});
  CHECK(lie_derivative(xf, DifferentialForm::coordinate(cq, Symbol("x"))).is_zero());

  Chart cu({"u"}, {});
  VectorField ddu = parse_field(cu, {"1"});
  DifferentialForm udu =
      DifferentialForm::coordinate(cu, Symbol("u")).scaled(RationalFunction::variable(Symbol("u")));
  CHECK(lie_derivative(ddu, udu) == DifferentialForm::coordinate(cu, Symbol("u")));
}

TEST_CASE("pullback of forms") {
  // phi: x -> 1 + epsilon^2 t pulls dx back to epsilon^2 dt
  Chart src({"t"}, {"epsilon"});
  Chart dst({"x"}, {});
  expr::ParseContext sctx{src, false};
  RationalMap phi(src, dst, {{Symbol("x"), expr::parse_rational("1 + epsilon^2*t", sctx)}});
  DifferentialForm got = pullback(phi, DifferentialForm::coordinate(dst, Symbol("x")));
  DifferentialForm want(src, 1);
  want.add_term({0}, expr::parse_rational("epsilon^2", sctx));
  CHECK(got == want);

  Chart chart = xuv();
  RationalMap id = RationalMap::identity(chart);
  testutil::Rng rng(3);
  for (unsigned g = 0; g <= 3; ++g) {
    DifferentialForm w = random_form(rng, chart, g);
    CHECK(pullback(id, w) == w);
    // naturality: phi^* d = d phi^*
    CHECK(pullback(id, exterior_derivative(w)) == exterior_derivative(pullback(id, w)));
  }

  // d commutes with pullback for a non-trivial map
  std::map<Symbol, RationalFunction> comp;
  expr::ParseContext cctx{chart, false};
  comp.emplace(Symbol("x"), expr::parse_rational("x + u^2", cctx));
  comp.emplace(Symbol("u"), expr::parse_rational("u*v + 1", cctx));
  comp.emplace(Symbol("v"), expr::parse_rational("v", cctx));
  RationalMap psi(chart, chart, comp);
  for (unsigned g = 0; g < 3; ++g) {
    DifferentialForm w = random_form(rng, chart, g);
    CHECK(pullback(psi, exterior_derivative(w)) == exterior_derivative(pullback(psi, w)));
  }
}

TEST_CASE("pullback functoriality") {
  Chart chart = xuv();
  expr::ParseContext ctx{chart, false};
  std::map<Symbol, RationalFunction> c1, c2;
  c1.emplace(Symbol("x"), expr::parse_rational("2*x", ctx));
  c1.emplace(Symbol("u"), expr::parse_rational("u + x", ctx));
  c1.emplace(Symbol("v"), expr::parse_rational("v", ctx));
  c2.emplace(Symbol("x"), expr::parse_rational("x", ctx));
  c2.emplace(Symbol("u"), expr::parse_rational("u*u", ctx));
  c2.emplace(Symbol("v"), expr::parse_rational("v + 1", ctx));
  RationalMap phi(chart, chart, c1), psi(chart, chart, c2);
  RationalMap comp = phi.compose_after(psi); // phi o psi
  testutil::Rng rng(8);
  for (unsigned g = 0; g <= 2; ++g) {
    DifferentialForm w = random_form(rng, chart, g);
    CHECK(pullback(comp, w) == pullback(psi, pullback(phi, w)));
  }
}

TEST_CASE("pullback of fields") {
  Chart chart = xuv();
  RationalMap id = RationalMap::identity(chart);
  const VectorField x = parse_field(chart, {"1", "v", "6*u^2 + x"});
  CHECK(pullback(id, x) == x);

  // linear map (u,v) -> (2u, v): d/du pulls back to (1/2) d/du
  Chart uv(std::vector<std::string>{"u", "v"}, {});
  expr::ParseContext ctx{uv, false};
  RationalMap lin(uv, uv, {{Symbol("u"), expr::parse_rational("2*u", ctx)},
                           {Symbol("v"), expr::parse_rational("v", ctx)}});
  VectorField ddu = parse_field(uv, {"1", "0"});
  VectorField half = parse_field(uv, {"1/2", "0"});
  CHECK(pullback(lin, ddu) == half);

  // invertible-by-construction map: pulling back along phi then its inverse
  // restores the field
  std::map<Symbol, RationalFunction> fwd{{Symbol("u"), expr::parse_rational("u + v^2", ctx)},
                                         {Symbol("v"), expr::parse_rational("v", ctx)}};
  std::map<Symbol, RationalFunction> bwd{{Symbol("u"), expr::parse_rational("u - v^2", ctx)},
                                         {Symbol("v"), expr::parse_rational("v", ctx)}};
  RationalMap phi(uv, uv, fwd), inv(uv, uv, bwd);
  testutil::Rng rng(9);
  for (int i = 0; i < 8; ++i) {
    VectorField y = random_field(rng, uv, 2);
    CHECK(pullback(inv, pullback(phi, y)) == y);
  }

  // singular fiber Jacobian
  RationalMap sing(uv, uv, {{Symbol("u"), expr::parse_rational("u", ctx)},
                            {Symbol("v"), expr::parse_rational("u", ctx)}});
  CHECK_THROWS_AS(pullback(sing, ddu), error);
}

TEST_CASE("hamiltonian fields") {
  Chart chart = xuv();
  expr::ParseContext ctx{chart, false};
  RationalFunction h = expr::parse_rational("(v^2 + u^2)/2", ctx);
  VectorField got = hamiltonian_field(h, chart);
  CHECK(got == parse_field(chart, {"1", "v", "-u"}));

  // H_IV: u-coefficient is 4uv - u^2 - 2xu - 2a
  VectorField h4 = hamiltonian_field(painleve::hamiltonian(painleve::Id::IV),
                                     painleve::hamiltonian_chart());
  expr::ParseContext hctx{painleve::hamiltonian_chart(), false};
  CHECK(h4.coeff(1) == expr::parse_rational("4*u*v - u^2 - 2*x*u - 2*a", hctx));

  CHECK_THROWS_AS(hamiltonian_field(h, Chart(std::vector<std::string>{"u", "v"}, {})), error);
}

TEST_CASE("divergence") {
  const VectorField& x2 = painleve::field(painleve::Id::II);
  CHECK(divergence(x2, volume(x2.chart())).is_zero());

  Chart cu({"u"}, {});
  VectorField u_ddu = parse_field(cu, {"u"});
  CHECK(divergence(u_ddu, DifferentialForm::coordinate(cu, Symbol("u"))).is_one());

  CHECK_THROWS_AS(divergence(u_ddu, DifferentialForm(cu, 1)), error);

  // hamiltonian fields are divergence-free: 100 random H of degree <= 3
  testutil::Rng rng(12);
  Chart chart = xuv();
  DifferentialForm vol = volume(chart);
  for (int i = 0; i < 100; ++i) {
    Polynomial h = testutil::random_poly(rng, chart.fiber(), 3, 5);
    VectorField y = hamiltonian_field(RationalFunction(h), chart);
    CHECK(divergence(y, vol).is_zero());
  }
}
