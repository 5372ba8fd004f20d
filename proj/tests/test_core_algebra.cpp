#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetgal/expr.hpp"
#include "jetgal/matrix.hpp"
#include "test_util.hpp"

using namespace jetgal;

namespace {

Symbol X() { return Symbol("x"); }
Symbol U() { return Symbol("u"); }
Symbol V() { return Symbol("v"); }

Polynomial var(const Symbol& s) { return Polynomial::variable(s); }

} // namespace

TEST_CASE("scalar rationals") {
  clear_extension();
  Scalar a(3, 6);
  CHECK(a == Scalar(1, 2));
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK((Scalar(2) / Scalar(3) * Scalar(3)) == Scalar(2));
  CHECK(Scalar(7).is_integer());
  CHECK(!Scalar(1, 2).is_integer());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), error);
}

TEST_CASE("scalar extension Q[rho]/(rho^6 - 2)") {
  clear_extension();
  register_extension("rho", {Rational(-2), Rational(0), Rational(0), Rational(0),
                             Rational(0), Rational(0)});
  Scalar r3 = Scalar::generator_power(3); // sqrt(2)
  CHECK(r3 * r3 == Scalar(2));
  CHECK((r3.pow(2) - Scalar(2)).is_zero());
  Scalar r4 = Scalar::generator_power(4); // 2^(2/3)
  CHECK(r4.pow(3) == Scalar(4));
  CHECK((r4 * r4.inverse()).is_one());
  CHECK(Scalar::generator_power(6) == Scalar(2));
  CHECK(Scalar::generator_power(1).pow(7) == Scalar(2) * Scalar::generator_power(1));
  clear_extension();
}

TEST_CASE("zero divisor detection in a reducible extension") {
  clear_extension();
  // x^2 - 1 is reducible; x - 1 is a zero divisor
  register_extension("w", {Rational(-1), Rational(0)});
  Scalar w = Scalar::generator_power(1);
  CHECK_THROWS_AS((w - Scalar(1)).inverse(), error);
  try {
    (w - Scalar(1)).inverse();
  } catch (const error& e) {
    CHECK(e.kind() == errc::zero_divisor);
  }
  clear_extension();
}

TEST_CASE("ring operations") {
  clear_extension();
  // (x+1)(x-1) = x^2 - 1
  Polynomial p = (var(X()) + Polynomial(1)) * (var(X()) - Polynomial(1));
  CHECK(p == var(X()) * var(X()) - Polynomial(1));
  // gcd(x^2-1, x^2-2x+1) = x - 1
  Polynomial a = var(X()) * var(X()) - Polynomial(1);
  Polynomial b = var(X()) * var(X()) - Polynomial(2) * var(X()) + Polynomial(1);
  CHECK(Polynomial::gcd(a, b) == var(X()) - Polynomial(1));
  // exact division errors on a remainder
  CHECK_THROWS_AS(Polynomial::exact_div(a + Polynomial(1), b), error);
  CHECK(Polynomial::exact_div(a * b, b) == a);
}

TEST_CASE("rational function normalization") {
  // (2 u^2 v) / (4 u v) -> u / 2
  RationalFunction f(Polynomial(2) * var(U()) * var(U()) * var(V()),
                     Polynomial(4) * var(U()) * var(V()));
  CHECK(expr::print(f) == "1/2*u");
  CHECK(f == RationalFunction(var(U()), Polynomial(2)));
  // denominator is monic
  RationalFunction g(var(U()), Polynomial(3) * var(X()) + Polynomial(3));
  CHECK(g.den().leading_term().coeff.is_one());
  CHECK(g.equals_cross(RationalFunction(var(U()), Polynomial(3) * (var(X()) + Polynomial(1)))));
}

TEST_CASE("partial derivatives") {
  Chart chart({"x", "u", "v"}, {"alpha"});
  expr::ParseContext ctx{chart, false};
  RationalFunction f = expr::parse_rational("2*u^3 + x*u + alpha", ctx);
  CHECK(expr::print(f.derivative(U())) == "6*u^2 + x");
  RationalFunction g = expr::parse_rational("u/x", ctx);
  CHECK(g.derivative(X()) == expr::parse_rational("-u/x^2", ctx));
  RationalFunction h = expr::parse_rational("v^2/u", ctx);
  CHECK(h.derivative(V()) == expr::parse_rational("2*v/u", ctx));
  CHECK(f.derivative(Symbol("alpha")).is_one());
}

TEST_CASE("substitution") {
  Chart chart({"x", "u", "f"}, {"epsilon", "y"});
  expr::ParseContext ctx{chart, false};
  RationalFunction u2 = expr::parse_rational("u^2", ctx);
  std::map<Symbol, RationalFunction> sigma{
      {Symbol("u"), expr::parse_rational("1 + 2*epsilon*f", ctx)}};
  CHECK(u2.substitute(sigma) ==
        expr::parse_rational("1 + 4*epsilon*f + 4*epsilon^2*f^2", ctx));

  RationalFunction inv_u = expr::parse_rational("1/u", ctx);
  std::map<Symbol, RationalFunction> zero{{Symbol("u"), RationalFunction()}};
  CHECK_THROWS_AS(inv_u.substitute(zero), error);

  RationalFunction xy = expr::parse_rational("x + y", ctx);
  CHECK(xy.substitute({}) == xy);
}

TEST_CASE("polynomial ring properties on random inputs") {
  testutil::Rng rng(2024);
  std::vector<Symbol> syms{X(), U(), V()};
  for (int i = 0; i < 60; ++i) {
    Polynomial f = testutil::random_poly(rng, syms, 3);
    Polynomial g = testutil::random_poly(rng, syms, 3);
    Polynomial h = testutil::random_poly(rng, syms, 3);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f - f).is_zero());
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("Leibniz rule on random products") {
  testutil::Rng rng(7);
  std::vector<Symbol> syms{X(), U(), V()};
  for (int i = 0; i < 40; ++i) {
    RationalFunction f = testutil::random_rf(rng, syms, 2);
    RationalFunction g = testutil::random_rf(rng, syms, 2);
    for (const auto& s : syms) {
      CHECK((f * g).derivative(s) == f.derivative(s) * g + f * g.derivative(s));
    }
  }
}

TEST_CASE("substitution is a ring morphism") {
  testutil::Rng rng(99);
  std::vector<Symbol> syms{X(), U(), V()};
  std::map<Symbol, RationalFunction> sigma{
      {X(), RationalFunction(var(U()) + Polynomial(1))},
      {U(), RationalFunction(var(X()) * var(V()), var(V()) + Polynomial(2))}};
  for (int i = 0; i < 25; ++i) {
    RationalFunction f = testutil::random_rf(rng, syms, 2);
    RationalFunction g = testutil::random_rf(rng, syms, 2);
    CHECK((f * g).substitute(sigma) == f.substitute(sigma) * g.substitute(sigma));
    CHECK((f + g).substitute(sigma) == f.substitute(sigma) + g.substitute(sigma));
  }
}

TEST_CASE("gcd on random products") {
  testutil::Rng rng(41);
  std::vector<Symbol> syms{X(), U()};
  for (int i = 0; i < 25; ++i) {
    Polynomial f = testutil::random_poly(rng, syms, 2, 3);
    Polynomial g = testutil::random_poly(rng, syms, 2, 3);
    Polynomial h = testutil::random_poly(rng, syms, 2, 3);
    if (h.is_zero()) continue;
    Polynomial gg = Polynomial::gcd(f * h, g * h);
    if (f.is_zero() && g.is_zero()) continue;
    // h divides the gcd
    CHECK_NOTHROW(Polynomial::exact_div(gg, Polynomial::gcd(gg, h)));
    CHECK(Monomial::divides(Polynomial::gcd(gg, h).leading_term().mono,
                            gg.leading_term().mono));
    if (!f.is_zero()) CHECK_NOTHROW(Polynomial::exact_div(f * h, gg) * gg == f * h);
  }
}

TEST_CASE("nullspace") {
  auto rf = [](long n) { return RationalFunction(Scalar(n)); };
  Matrix m(2, 2);
  m.at(0, 0) = rf(1); m.at(0, 1) = rf(1);
  m.at(1, 0) = rf(2); m.at(1, 1) = rf(2);
  auto basis = m.nullspace();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == rf(1));
  CHECK(basis[0][1] == rf(-1));

  CHECK(Matrix::identity(3).nullspace().empty());

  Matrix z(1, 2);
  auto zb = z.nullspace();
  REQUIRE(zb.size() == 2);
  CHECK(zb[0][0] == rf(1));
  CHECK(zb[0][1] == rf(0));
  CHECK(zb[1][0] == rf(0));
  CHECK(zb[1][1] == rf(1));

  // M v = 0 exactly, vectors independent
  testutil::Rng rng(5);
  Matrix r(3, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) r.at(i, j) = rf(rng.range(-3, 3));
  auto nb = r.nullspace();
  CHECK(nb.size() == 5 - r.rank());
  for (const auto& v : nb)
    for (std::size_t i = 0; i < 3; ++i) {
      RationalFunction acc;
      for (std::size_t j = 0; j < 5; ++j) acc += r.at(i, j) * v[j];
      CHECK(acc.is_zero());
    }
}

TEST_CASE("determinant and inverse") {
  clear_extension();
  Symbol eps("epsilon");
  RationalFunction e = RationalFunction::variable(eps);
  Matrix m(3, 3);
  m.at(0, 0) = e * e;
  m.at(1, 1) = RationalFunction(Scalar(2)) * e;
  m.at(2, 2) = RationalFunction(Scalar(2)) / e;
  CHECK(m.det() == RationalFunction(Scalar(4)) * e * e);
  Matrix inv = m.inverse();
  CHECK(inv.at(0, 0) == (e * e).inverse());
  CHECK(inv.at(1, 1) == (RationalFunction(Scalar(2)) * e).inverse());
  CHECK(inv.at(2, 2) == e / RationalFunction(Scalar(2)));
  CHECK(m * inv == Matrix::identity(3));

  CHECK(Matrix::identity(4).det().is_one());

  Matrix s(2, 2);
  s.at(0, 0) = RationalFunction::variable(Symbol("u"));
  CHECK_THROWS_AS(s.inverse(), error);

  // det(AB) = det(A) det(B) on small random matrices
  testutil::Rng rng(11);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Matrix a((std::size_t)n, (std::size_t)n), b((std::size_t)n, (std::size_t)n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = RationalFunction(Scalar(rng.range(-4, 4)));
          b.at(i, j) = RationalFunction(Scalar(rng.range(-4, 4)));
        }
      CHECK((a * b).det() == a.det() * b.det());
    }
  }
}
