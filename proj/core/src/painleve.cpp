#include "jetgal/painleve.hpp"

#include <array>
#include <sstream>

#include "jetgal/expr.hpp"

namespace jetgal::painleve {

namespace {

constexpr std::array<const char*, 6> kNames = {"I", "II", "III", "IV", "V", "VI"};

const std::vector<std::string>& param_name_list(Id id) {
  static const std::vector<std::string> none = {};
  static const std::vector<std::string> one = {"alpha"};
  static const std::vector<std::string> two = {"alpha", "beta"};
  static const std::vector<std::string> four = {"alpha", "beta", "gamma", "delta"};
  switch (id) {
    case Id::I: return none;
    case Id::II: return one;
    case Id::IV: return two;
    default: return four;
  }
}

const char* rhs_text(Id id) {
  switch (id) {
    case Id::I:
      return "6*u^2 + x";
    case Id::II:
      return "2*u^3 + x*u + alpha";
    case Id::III:
      return "v^2/u - v/x + (alpha*u^2 + beta)/x + gamma*u^3 + delta/u";
    case Id::IV:
      return "v^2/(2*u) + 3*u^3/2 + 4*x*u^2 + 2*(x^2 - alpha)*u + beta/u";
    case Id::V:
      return "(1/(2*u) + 1/(u - 1))*v^2 - v/x + (u - 1)^2*(alpha*u + beta/u)/x^2"
             " + gamma*u/x + delta*u*(u + 1)/(u - 1)";
    case Id::VI:
      return "(1/u + 1/(u - 1) + 1/(u - x))*v^2/2 - (1/x + 1/(x - 1) + 1/(u - x))*v"
             " + u*(u - 1)*(u - x)*(alpha + beta*x/u^2 + gamma*(x - 1)/(u - 1)^2"
             " + delta*x*(x - 1)/(u - x)^2)/(x^2*(x - 1)^2)";
  }
  return "";
}

const char* hamiltonian_text(Id id) {
  switch (id) {
    case Id::III:
      return "(2*u^2*v^2 - (2*a*x*u^2 + (2*b + 1)*u - 2*c*x)*v + a*(b + d)*x*u)/x";
    case Id::IV:
      return "2*u*v^2 - (u^2 + 2*x*u + 2*a)*v + b*u";
    case Id::V:
      return "(u*(u - 1)^2*v^2 - (a*(u - 1)^2 + b*u*(u - 1) - c*x*u)*v"
             " + ((a + b)^2 - d^2)*(u - 1)/4)/x";
    case Id::VI:
      return "(u*(u - 1)*(u - x)*v^2 - (a*(u - 1)*(u - x) + b*u*(u - x)"
             " + (c - 1)*u*(u - 1))*v + ((a + b + c - 1)^2 - d^2)*(u - x)/4)/(x*(x - 1))";
    default:
      raise(errc::invalid_argument, "no Hamiltonian form for this equation");
  }
}

} // namespace

const char* name(Id id) { return kNames[(std::size_t)id]; }

Id id_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (s == kNames[i]) return (Id)i;
  raise(errc::invalid_argument, "unknown equation '" + s + "' (expected I..VI)");
}

std::size_t param_arity(Id id) { return param_name_list(id).size(); }

const Chart& equation_chart(Id id) {
  static std::array<Chart, 6> charts = [] {
    std::array<Chart, 6> out;
    for (std::size_t i = 0; i < 6; ++i)
      out[i] = Chart({"x", "u", "v"}, param_name_list((Id)i));
    return out;
  }();
  return charts[(std::size_t)id];
}

const RationalFunction& rhs(Id id) {
  static std::array<RationalFunction, 6> cache = [] {
    std::array<RationalFunction, 6> out;
    for (std::size_t i = 0; i < 6; ++i) {
      expr::ParseContext ctx{equation_chart((Id)i), false};
      out[i] = expr::parse_rational(rhs_text((Id)i), ctx);
    }
    return out;
  }();
  return cache[(std::size_t)id];
}

const VectorField& field(Id id) {
  static std::array<VectorField, 6> cache = [] {
    std::array<VectorField, 6> out;
    for (std::size_t i = 0; i < 6; ++i) {
      const Chart& chart = equation_chart((Id)i);
      out[i] = VectorField(chart, {RationalFunction(Scalar(1)),
                                   RationalFunction::variable(chart.fiber(2)),
                                   rhs((Id)i)});
    }
    return out;
  }();
  return cache[(std::size_t)id];
}

VectorField field(Id id, const std::map<Symbol, Scalar>& specialization) {
  const Chart& chart = equation_chart(id);
  if (specialization.size() != chart.param_dim())
    raise(errc::arity_mismatch, "specialization must cover the parameters exactly");
  std::map<Symbol, RationalFunction> sigma;
  for (const auto& p : chart.params()) {
    auto it = specialization.find(p);
    if (it == specialization.end())
      raise(errc::arity_mismatch, "missing value for parameter '" + p.name() + "'");
    sigma.emplace(p, RationalFunction(it->second));
  }
  Chart plain = Chart::from_symbols(chart.fiber(), {});
  std::vector<RationalFunction> coeffs;
  for (const auto& c : field(id).coeffs()) coeffs.push_back(c.substitute(sigma));
  return VectorField(std::move(plain), std::move(coeffs));
}

const Chart& hamiltonian_chart() {
  static Chart chart({"x", "u", "v"}, {"a", "b", "c", "d"});
  return chart;
}

const RationalFunction& hamiltonian(Id id) {
  static std::map<Id, RationalFunction> cache = [] {
    std::map<Id, RationalFunction> out;
    expr::ParseContext ctx{hamiltonian_chart(), false};
    for (Id id : {Id::III, Id::IV, Id::V, Id::VI})
      out.emplace(id, expr::parse_rational(hamiltonian_text(id), ctx));
    return out;
  }();
  auto it = cache.find(id);
  if (it == cache.end()) raise(errc::invalid_argument, "no Hamiltonian form for this equation");
  return it->second;
}

namespace {

DifferentialForm standard_volume(const Chart& chart) {
  DifferentialForm w(chart, 3);
  w.add_term({0, 1, 2}, RationalFunction(Scalar(1)));
  return w;
}

} // namespace

bool verify_volume(Id id) {
  if (id == Id::I || id == Id::II) {
    const VectorField& x = field(id);
    return divergence(x, standard_volume(x.chart())).is_zero();
  }
  VectorField y = hamiltonian_field(hamiltonian(id), hamiltonian_chart());
  return divergence(y, standard_volume(hamiltonian_chart())).is_zero();
}

namespace {

// residue of the conjugation identity under sigma for the equation params
RationalFunction hamiltonian_residue(Id id, const RationalFunction& h,
                                     const std::map<Symbol, RationalFunction>& pm) {
  const Chart& hc = hamiltonian_chart();
  const Symbol& x = hc.fiber(0);
  const Symbol& u = hc.fiber(1);
  const Symbol& v = hc.fiber(2);
  RationalFunction hv = h.derivative(v);
  RationalFunction hu = h.derivative(u);
  RationalFunction lhs = hv.derivative(x) + hv * hv.derivative(u) - hu * hv.derivative(v);

  std::map<Symbol, RationalFunction> sigma = pm;
  sigma.emplace(Symbol("v"), hv);
  RationalFunction rhs_at = rhs(id).substitute(sigma);
  return lhs - rhs_at;
}

void check_param_cover(Id id, const std::map<Symbol, RationalFunction>& pm) {
  const Chart& ec = equation_chart(id);
  if (pm.size() != ec.param_dim())
    raise(errc::arity_mismatch, "parameter map must cover the parameters exactly");
  for (const auto& p : ec.params())
    if (pm.find(p) == pm.end())
      raise(errc::arity_mismatch, "missing image for parameter '" + p.name() + "'");
}

} // namespace

HamiltonianCheck verify_hamiltonian(Id id, const std::map<Symbol, RationalFunction>& pm) {
  return verify_hamiltonian_candidate(id, hamiltonian(id), pm);
}

HamiltonianCheck verify_hamiltonian_candidate(Id id, const RationalFunction& h,
                                              const std::map<Symbol, RationalFunction>& pm) {
  check_param_cover(id, pm);
  HamiltonianCheck out;
  out.residue = hamiltonian_residue(id, h, pm);
  out.pass = out.residue.is_zero();
  return out;
}

ParamMap derive_param_map(Id id) {
  const Chart& ec = equation_chart(id);
  if (ec.param_dim() == 0) raise(errc::invalid_argument, "equation has no parameters");
  // leave the equation parameters symbolic and solve the linear system their
  // coefficients must satisfy
  std::map<Symbol, RationalFunction> keep;
  for (const auto& p : ec.params()) keep.emplace(p, RationalFunction::variable(p));
  RationalFunction residue = hamiltonian_residue(id, hamiltonian(id), keep);
  Polynomial n = residue.num();

  const std::vector<Symbol>& unknowns = ec.params();
  // N = N_0 + sum_i pi_i N_i, N_i free of the unknowns
  std::vector<Polynomial> parts(unknowns.size() + 1);
  for (const auto& t : n.terms()) {
    int which = -1;
    std::vector<Monomial::Factor> rest;
    for (const auto& f : t.mono.factors()) {
      bool is_unknown = false;
      for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (f.first == unknowns[i]) {
          if (which >= 0 || f.second > 1)
            raise(errc::no_solution, "identity is not linear in the parameters");
          which = (int)i;
          is_unknown = true;
          break;
        }
      }
      if (!is_unknown) rest.push_back(f);
    }
    parts[which + 1] += Polynomial::term(t.coeff, Monomial(std::move(rest)));
  }

  // rows: monomials in (x, u, v); entries: polynomials in (a, b, c, d)
  std::set<Symbol> mains(hamiltonian_chart().fiber().begin(),
                         hamiltonian_chart().fiber().end());
  auto split = [&](const Polynomial& p) {
    std::map<Monomial, RationalFunction, TermOrderGreater> v;
    for (const auto& t : p.terms()) {
      std::vector<Monomial::Factor> main, coeff;
      for (const auto& f : t.mono.factors())
        (mains.count(f.first) ? main : coeff).push_back(f);
      Monomial key{std::move(main)};
      auto it = v.find(key);
      RationalFunction add{Polynomial::term(t.coeff, Monomial(std::move(coeff)))};
      if (it == v.end()) v.emplace(std::move(key), std::move(add));
      else it->second += add;
    }
    return v;
  };

  std::map<Monomial, std::size_t, TermOrderGreater> rows;
  std::vector<std::map<Monomial, RationalFunction, TermOrderGreater>> cols(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    cols[i] = split(parts[i]);
    for (const auto& [m, c] : cols[i]) rows.emplace(m, 0);
  }
  std::size_t nrows = 0;
  for (auto& [m, idx] : rows) idx = nrows++;

  Matrix a(nrows, unknowns.size());
  std::vector<RationalFunction> b(nrows);
  for (const auto& [m, c] : cols[0]) b[rows[m]] = -c;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    for (const auto& [m, c] : cols[i + 1]) a.at(rows[m], i) = c;

  LinearSolution sol = solve_linear(a, b);
  if (!sol.consistent)
    raise(errc::no_solution, "conjugation identity has no parameter solution");

  ParamMap out;
  out.unique = sol.unique;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    out.images.emplace(unknowns[i], sol.values[i]);
  return out;
}

void ensure_radical_extension() {
  // rho^6 = 2: sqrt(2) = rho^3, 2^(2/3) = rho^4
  register_extension("rho", {Rational(-2), Rational(0), Rational(0), Rational(0),
                             Rational(0), Rational(0)});
}

namespace {

Confluence make_confluence(Id source, Id target, const std::vector<std::string>& residual,
                           const std::array<const char*, 3>& fiber,
                           const std::vector<const char*>& params, const char* scale) {
  Confluence c;
  c.source = source;
  c.target = target;
  std::vector<std::string> ps = residual;
  ps.push_back("epsilon");
  c.chart = Chart({"t", "f", "g"}, ps);
  expr::ParseContext ctx{c.chart, false};
  for (const char* t : fiber) c.fiber_map.push_back(expr::parse_rational(t, ctx));
  const Chart& ec = equation_chart(source);
  for (std::size_t i = 0; i < ec.param_dim(); ++i)
    c.param_map.emplace(ec.params()[i], expr::parse_rational(params[i], ctx));
  c.scale = expr::parse_rational(scale, ctx);
  return c;
}

} // namespace

const std::vector<Confluence>& confluences() {
  static std::vector<Confluence> all = [] {
    ensure_radical_extension();
    std::vector<Confluence> out;
    out.push_back(make_confluence(
        Id::III, Id::II, {"a"},
        {"1 + epsilon^2*t", "1 + 2*epsilon*f", "2*g/epsilon"},
        {"-1/(2*epsilon^6)", "2*a/epsilon^3 + 1/(2*epsilon^6)", "1/(4*epsilon^6)",
         "-1/(4*epsilon^6)"},
        "epsilon^2"));
    out.push_back(make_confluence(
        Id::IV, Id::II, {"a"},
        {"epsilon*t*rho^2/2 - 1/epsilon^3", "rho^4*f/epsilon + 1/epsilon^3",
         "2*rho^2*g/epsilon^2"},
        {"-2*a - 1/(2*epsilon^6)", "-1/(2*epsilon^12)"},
        "epsilon*rho^2/2"));
    out.push_back(make_confluence(
        Id::V, Id::IV, {"a", "b"},
        {"1 + epsilon*rho^3*t", "epsilon*rho^3*f/2", "g/2"},
        {"1/(2*epsilon^4)", "b/4", "-1/epsilon^4", "a/epsilon^2 - 1/(2*epsilon^4)"},
        "epsilon*rho^3"));
    out.push_back(make_confluence(
        Id::VI, Id::V, {"a", "b", "c", "d"},
        {"1 + epsilon*t", "f", "g/epsilon"},
        {"a", "b", "-d/epsilon^2 + c/epsilon", "d/epsilon^2"},
        "epsilon"));
    return out;
  }();
  return all;
}

const Confluence& confluence(Id source, Id target) {
  for (const auto& c : confluences())
    if (c.source == source && c.target == target) return c;
  raise(errc::invalid_argument, std::string("no catalog confluence ") + name(source) +
                                    " -> " + name(target));
}

VectorField confluence_field(const Confluence& c) {
  const Chart& ec = equation_chart(c.source);
  std::map<Symbol, RationalFunction> components = c.param_map;
  for (std::size_t i = 0; i < 3; ++i) components.emplace(ec.fiber(i), c.fiber_map[i]);
  RationalMap phi(c.chart, ec, std::move(components));
  return pullback(phi, field(c.source)).scaled(c.scale);
}

ConfluenceCheck verify_confluence(const Confluence& c) {
  VectorField y = confluence_field(c);
  Symbol eps = c.chart.params().back();
  std::map<Symbol, RationalFunction> at_zero{{eps, RationalFunction()}};

  ConfluenceCheck out;
  std::vector<RationalFunction> limit;
  for (std::size_t i = 0; i < 3; ++i) {
    const RationalFunction& coeff = y.coeff(i);
    RationalFunction den_at_zero = substitute(coeff.den(), at_zero);
    if (den_at_zero.is_zero())
      raise(errc::pole_at_zero, std::string("coefficient on ") +
                                    c.chart.fiber(i).name() +
                                    " is not regular at epsilon = 0");
    limit.push_back(coeff.substitute(at_zero));
  }

  // target field with (x,u,v) renamed to (t,f,g) and parameters to (a,b,c,d)
  const Chart& tc = equation_chart(c.target);
  std::map<Symbol, RationalFunction> rename;
  for (std::size_t i = 0; i < 3; ++i)
    rename.emplace(tc.fiber(i), RationalFunction::variable(c.chart.fiber(i)));
  for (std::size_t i = 0; i < tc.param_dim(); ++i)
    rename.emplace(tc.params()[i], RationalFunction::variable(c.chart.params()[i]));

  out.pass = true;
  for (std::size_t i = 0; i < 3; ++i) {
    RationalFunction want = field(c.target).coeff(i).substitute(rename);
    if (limit[i] != want) {
      out.pass = false;
      out.detail = std::string("coefficient on ") + c.chart.fiber(i).name() +
                   ": got " + expr::print(limit[i]) + ", want " + expr::print(want);
      break;
    }
  }
  return out;
}

std::string catalog_text() {
  std::ostringstream os;
  os << "painleve-catalog v1\n";
  for (std::size_t i = 0; i < 6; ++i) {
    Id id = (Id)i;
    os << "\n[" << name(id) << "]\n";
    const Chart& ec = equation_chart(id);
    os << "params";
    for (const auto& p : ec.params()) os << " " << p.name();
    os << "\n";
    os << "F = " << expr::print(rhs(id)) << "\n";
    if (id != Id::I && id != Id::II) {
      os << "H = " << expr::print(hamiltonian(id)) << "\n";
      ParamMap pm = derive_param_map(id);
      os << "param-map (" << (pm.unique ? "unique" : "one branch") << ")\n";
      for (const auto& p : ec.params())
        os << "  " << p.name() << " = " << expr::print(pm.images.at(p)) << "\n";
    }
  }
  for (const auto& c : confluences()) {
    os << "\n[confluence " << name(c.source) << " -> " << name(c.target) << "]\n";
    os << "scale = " << expr::print(c.scale) << "\n";
    const Chart& ec = equation_chart(c.source);
    for (std::size_t i = 0; i < 3; ++i)
      os << ec.fiber(i).name() << " = " << expr::print(c.fiber_map[i]) << "\n";
    for (const auto& p : ec.params())
      os << p.name() << " = " << expr::print(c.param_map.at(p)) << "\n";
  }
  return os.str();
}

} // namespace jetgal::painleve
