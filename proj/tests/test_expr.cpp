#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetgal/expr.hpp"
#include "jetgal/painleve.hpp"
#include "test_util.hpp"

using namespace jetgal;

namespace {

Chart p2_chart() { return Chart({"x", "u", "v"}, {"alpha"}); }

RationalFunction rt_rf(const std::string& text, const expr::ParseContext& ctx) {
  RationalFunction f = expr::parse_rational(text, ctx);
  RationalFunction again = expr::parse_rational(expr::print(f), ctx);
  CHECK(again == f);
  return f;
}

} // namespace

TEST_CASE("grammar basics") {
  expr::ParseContext ctx{p2_chart(), true};
  RationalFunction f = rt_rf("2*u^3 + x*u + alpha", ctx);
  CHECK(f == painleve::rhs(painleve::Id::II));

  RationalFunction jet = rt_rf("u[1,0,2]", ctx);
  CHECK(jet == RationalFunction::variable(Symbol("u[1,0,2]")));

  // y^0 is the coordinate itself
  CHECK(expr::parse_rational("u[0,0,0]", ctx) == RationalFunction::variable(Symbol("u")));

  DifferentialForm vol = expr::parse_form("d(x) /\\ d(u) /\\ d(v)", ctx);
  CHECK(vol.degree() == 3);
  CHECK(vol.coefficient({0, 1, 2}).is_one());
  CHECK(expr::parse_form(expr::print(vol), ctx) == vol);
}

TEST_CASE("precedence and associativity") {
  expr::ParseContext ctx{p2_chart(), false};
  CHECK(expr::parse_rational("2*u^3", ctx) ==
        RationalFunction(Scalar(2)) * RationalFunction::variable(Symbol("u")).pow(3));
  CHECK(expr::parse_rational("-u^2", ctx) ==
        -RationalFunction::variable(Symbol("u")).pow(2));
  CHECK(expr::parse_rational("1/2*u", ctx) ==
        RationalFunction(Scalar(1, 2)) * RationalFunction::variable(Symbol("u")));
  CHECK(expr::parse_rational("u - v - x", ctx) ==
        expr::parse_rational("u - (v + x)", ctx));
  CHECK(expr::parse_rational("2^3^2", ctx) == RationalFunction(Scalar(512)));
  // wedge binds loosest
  expr::ParseContext jctx{p2_chart(), true};
  DifferentialForm w = expr::parse_form("d(x) /\\ d(u) + d(v)", jctx);
  CHECK(w.degree() == 2); // d(x) ^ (d(u) + d(v))
  CHECK(w.coefficient({0, 1}).is_one());
  CHECK(w.coefficient({0, 2}).is_one());
}

TEST_CASE("parse errors carry positions") {
  expr::ParseContext ctx{p2_chart(), true};
  auto expect_throw = [&](const std::string& text, errc kind, const std::string& frag) {
    try {
      (void)expr::parse(text, ctx);
      CHECK_MESSAGE(false, "expected a parse error for: " << text);
    } catch (const error& e) {
      CHECK(e.kind() == kind);
      CHECK_MESSAGE(std::string(e.what()).find(frag) != std::string::npos, e.what());
    }
  };
  expect_throw("u +", errc::syntax_error, "1:4");
  expect_throw("u + )", errc::syntax_error, "1:5");
  expect_throw("nope + 1", errc::unknown_symbol, "nope");
  expect_throw("u^v", errc::syntax_error, "integer literal");
  expect_throw("u^(2)", errc::syntax_error, "integer literal");
  expect_throw("w[1,0]", errc::unknown_symbol, "fiber");
  expect_throw("u[1]", errc::syntax_error, "length");
  expect_throw("u @ v", errc::syntax_error, "unexpected character");
  expect_throw("d(x) + u", errc::syntax_error, "form");
}

TEST_CASE("round trips on catalog expressions") {
  using namespace jetgal::painleve;
  for (Id id : {Id::I, Id::II, Id::III, Id::IV, Id::V, Id::VI}) {
    expr::ParseContext ctx{equation_chart(id), false};
    CHECK(expr::parse_rational(expr::print(rhs(id)), ctx) == rhs(id));
  }
  for (Id id : {Id::III, Id::IV, Id::V, Id::VI}) {
    expr::ParseContext ctx{hamiltonian_chart(), false};
    CHECK(expr::parse_rational(expr::print(hamiltonian(id)), ctx) == hamiltonian(id));
  }
  for (const auto& c : confluences()) {
    expr::ParseContext ctx{c.chart, false};
    CHECK(expr::parse_rational(expr::print(c.scale), ctx) == c.scale);
    for (const auto& f : c.fiber_map)
      CHECK(expr::parse_rational(expr::print(f), ctx) == f);
    for (const auto& [s, f] : c.param_map)
      CHECK(expr::parse_rational(expr::print(f), ctx) == f);
  }
}

TEST_CASE("round trips on random expressions") {
  testutil::Rng rng(2718);
  Chart chart = p2_chart();
  expr::ParseContext ctx{chart, false};
  std::vector<Symbol> syms = chart.all_symbols();
  for (int i = 0; i < 60; ++i) {
    RationalFunction f = testutil::random_rf(rng, syms, 3);
    CHECK(expr::parse_rational(expr::print(f), ctx) == f);
  }
}

TEST_CASE("round trips with the radical extension") {
  painleve::ensure_radical_extension();
  expr::ParseContext ctx{p2_chart(), false};
  RationalFunction f =
      RationalFunction(Scalar::generator_power(4)) * RationalFunction::variable(Symbol("u")) +
      RationalFunction(Scalar(1, 2) * Scalar::generator_power(3) + Scalar(5));
  CHECK(expr::parse_rational(expr::print(f), ctx) == f);
  CHECK(expr::parse_rational("rho^6", ctx) == RationalFunction(Scalar(2)));
}

TEST_CASE("round trips on forms") {
  testutil::Rng rng(999);
  Chart chart = p2_chart();
  expr::ParseContext ctx{chart, true};
  for (int i = 0; i < 25; ++i) {
    DifferentialForm w(chart, 2);
    for (int t = 0; t < 2; ++t) {
      std::size_t a = (std::size_t)rng.range(0, 2);
      std::size_t b = (std::size_t)rng.range(0, 2);
      if (a == b) continue;
      w.add_term({a, b},
                 RationalFunction(testutil::random_poly(rng, chart.all_symbols(), 2, 3)));
    }
    if (w.is_zero()) continue;
    CHECK(expr::parse_form(expr::print(w), ctx) == w);
  }
}

TEST_CASE("printing is deterministic and canonical") {
  expr::ParseContext ctx{p2_chart(), false};
  // construction order does not leak into the output
  RationalFunction a = expr::parse_rational("x + u + v", ctx);
  RationalFunction b = expr::parse_rational("v + u + x", ctx);
  CHECK(expr::print(a) == expr::print(b));
  CHECK(expr::print(expr::parse_rational("(u + 1)/(x*v)", ctx)) == "(u + 1)/(v*x)");
  CHECK(expr::print(expr::parse_rational("u/x^2", ctx)) == "u/x^2");
  CHECK(expr::print(expr::parse_rational("-u/x", ctx)) == "-u/x");
}
