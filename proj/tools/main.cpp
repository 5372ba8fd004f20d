#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "jetgal/dimension_polynomial.hpp"
#include "jetgal/first_integrals.hpp"
#include "src/cli_common.hpp"
#include "src/jobfile.hpp"

using namespace jetgal;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  bool json_mode = false;
  std::uint64_t seed = 0xC0FFEE;
};

int emit(const GlobalOptions& g, const json& doc, const std::string& text) {
  if (g.json_mode)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

json field_json(const VectorField& x) {
  json out;
  for (std::size_t i = 0; i < x.chart().fiber_dim(); ++i)
    out[x.chart().fiber(i).name()] = expr::print(x.coeff(i));
  return out;
}

void add_chart_options(CLI::App* cmd, cli::ChartOptions& chart) {
  cmd->add_option("--chart", chart.fiber, "fiber coordinates, e.g. 'x,u,v'");
  cmd->add_option("--params", chart.params, "parameters, e.g. 'alpha,beta'");
  cmd->add_option("--extension", chart.extension,
                  "algebraic generator, e.g. 'rho^6=2'");
}

void add_field_options(CLI::App* cmd, cli::FieldSource& src) {
  add_chart_options(cmd, src.chart);
  cmd->add_option("--field", src.coeffs, "semicolon-separated coefficients");
  cmd->add_option("--painleve", src.painleve_id, "catalog field I..VI");
  cmd->add_option("--set", src.set, "parameter values, e.g. 'alpha=1/2'");
}

VectorField prolonged(const VectorField& x, unsigned order) {
  if (order == 0) return x;
  return prolong_frame(x, JetContext(x.chart(), order));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact prolongation, first-integral, and Painleve catalog toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_flag("--json", global.json_mode, "machine-readable output");
  app.add_option("--seed", global.seed, "seed for randomized point selection");

  int exit_code = 0;

  // prolong ----------------------------------------------------------------
  auto* prolong_cmd = app.add_subcommand("prolong", "prolong a field to order-k frame coordinates");
  auto prolong_src = std::make_shared<cli::FieldSource>();
  auto prolong_order = std::make_shared<unsigned>(1);
  add_field_options(prolong_cmd, *prolong_src);
  prolong_cmd->add_option("--order", *prolong_order, "jet order k");
  prolong_cmd->callback([&, prolong_src, prolong_order] {
    VectorField r = prolonged(prolong_src->build(), *prolong_order);
    exit_code = emit(global, field_json(r), expr::print_field(r) + "\n");
  });

  // bracket ------------------------------------------------------------------
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [X, Y]");
  auto bracket_src = std::make_shared<cli::FieldSource>();
  auto bracket_second = std::make_shared<std::string>();
  add_field_options(bracket_cmd, *bracket_src);
  bracket_cmd->add_option("--field2", *bracket_second, "second field's coefficients")
      ->required();
  bracket_cmd->callback([&, bracket_src, bracket_second] {
    VectorField x = bracket_src->build();
    VectorField y = cli::parse_field_coeffs(x.chart(), *bracket_second);
    VectorField b = lie_bracket(x, y);
    exit_code = emit(global, field_json(b), expr::print_field(b) + "\n");
  });

  // lie ----------------------------------------------------------------------
  auto* lie_cmd = app.add_subcommand("lie", "Lie derivative of a form or function");
  auto lie_src = std::make_shared<cli::FieldSource>();
  auto lie_form = std::make_shared<std::string>();
  auto lie_fn = std::make_shared<std::string>();
  add_field_options(lie_cmd, *lie_src);
  lie_cmd->add_option("--form", *lie_form, "differential form expression");
  lie_cmd->add_option("--function", *lie_fn, "function expression");
  lie_cmd->callback([&, lie_src, lie_form, lie_fn] {
    VectorField x = lie_src->build();
    expr::ParseContext ctx{x.chart(), true};
    std::string text;
    if (!lie_form->empty()) {
      DifferentialForm w = expr::parse_form(*lie_form, ctx);
      text = expr::print(lie_derivative(x, w));
    } else if (!lie_fn->empty()) {
      text = expr::print(x.apply(expr::parse_rational(*lie_fn, ctx)));
    } else {
      raise(errc::invalid_argument, "need --form or --function");
    }
    exit_code = emit(global, json{{"result", text}}, text + "\n");
  });

  // pullback -------------------------------------------------------------------
  auto* pull_cmd = app.add_subcommand("pullback", "pull a field or form back along a map");
  auto pull_source_chart = std::make_shared<cli::ChartOptions>();
  auto pull_target_chart = std::make_shared<cli::ChartOptions>();
  auto pull_map = std::make_shared<std::string>();
  auto pull_field = std::make_shared<std::string>();
  auto pull_form = std::make_shared<std::string>();
  auto pull_scale = std::make_shared<std::string>();
  pull_cmd->add_option("--source-chart", pull_source_chart->fiber, "source fiber coordinates")->required();
  pull_cmd->add_option("--source-params", pull_source_chart->params, "source parameters");
  pull_cmd->add_option("--extension", pull_source_chart->extension, "algebraic generator");
  pull_cmd->add_option("--target-chart", pull_target_chart->fiber, "target fiber coordinates")->required();
  pull_cmd->add_option("--target-params", pull_target_chart->params, "target parameters");
  pull_cmd->add_option("--map", *pull_map, "components 'x=...; u=...'")->required();
  pull_cmd->add_option("--target-field", *pull_field, "field on the target");
  pull_cmd->add_option("--target-form", *pull_form, "form on the target");
  pull_cmd->add_option("--scale", *pull_scale, "multiply the pulled-back field");
  pull_cmd->callback([&, pull_source_chart, pull_target_chart, pull_map, pull_field,
                      pull_form, pull_scale] {
    Chart src = pull_source_chart->build();
    Chart dst = pull_target_chart->build();
    expr::ParseContext sctx{src, true};
    RationalMap phi(src, dst, cli::parse_assignments(sctx, *pull_map));
    if (!pull_field->empty()) {
      VectorField x = cli::parse_field_coeffs(dst, *pull_field);
      VectorField y = pullback(phi, x);
      if (!pull_scale->empty()) y = y.scaled(expr::parse_rational(*pull_scale, sctx));
      exit_code = emit(global, field_json(y), expr::print_field(y) + "\n");
    } else if (!pull_form->empty()) {
      expr::ParseContext dctx{dst, true};
      DifferentialForm w = expr::parse_form(*pull_form, dctx);
      std::string text = expr::print(pullback(phi, w));
      exit_code = emit(global, json{{"result", text}}, text + "\n");
    } else {
      raise(errc::invalid_argument, "need --target-field or --target-form");
    }
  });

  // integrals ------------------------------------------------------------------
  auto* integrals_cmd = app.add_subcommand("integrals", "first-integral search and checks");
  integrals_cmd->require_subcommand(1);

  auto* find_cmd = integrals_cmd->add_subcommand("find", "basis of first integrals");
  auto find_src = std::make_shared<cli::FieldSource>();
  auto find_order = std::make_shared<unsigned>(0);
  auto find_degree = std::make_shared<unsigned>(1);
  auto find_den = std::make_shared<std::string>();
  auto find_jmax = std::make_shared<unsigned>(1);
  auto find_slice = std::make_shared<std::string>();
  auto find_weighted = std::make_shared<bool>(false);
  auto find_rank = std::make_shared<bool>(false);
  add_field_options(find_cmd, *find_src);
  find_cmd->add_option("--order", *find_order, "prolongation order (0 = the field itself)");
  find_cmd->add_option("--degree", *find_degree, "total degree bound");
  find_cmd->add_option("--denominator", *find_den, "fixed denominator Q");
  find_cmd->add_option("--jmax", *find_jmax, "maximal power of Q");
  find_cmd->add_option("--slice", *find_slice, "invariant slice 'sym=expr; ...'");
  find_cmd->add_flag("--weighted", *find_weighted, "weigh jet variables by |alpha|");
  find_cmd->add_flag("--rank", *find_rank, "also print the seeded Jacobian rank");
  find_cmd->callback([&, find_src, find_order, find_degree, find_den, find_jmax,
                      find_slice, find_weighted, find_rank] {
    VectorField base = find_src->build();
    VectorField x = prolonged(base, *find_order);
    expr::ParseContext ctx{base.chart(), true};
    if (!find_slice->empty())
      x = restrict_to_slice(x, cli::parse_assignments(ctx, *find_slice));
    DegreeWeighting w =
        *find_weighted ? DegreeWeighting::jet_order : DegreeWeighting::total;
    FirstIntegralBasis basis;
    if (!find_den->empty()) {
      RationalFunction q = expr::parse_rational(*find_den, ctx);
      if (!q.is_polynomial()) raise(errc::invalid_argument, "--denominator must be a polynomial");
      basis = find_fixed_denominator_integrals(x, q.num(), *find_degree, *find_jmax, w);
    } else {
      basis = find_polynomial_integrals(x, *find_degree, w);
    }
    json doc;
    std::ostringstream text;
    doc["dimension"] = basis.integrals.size();
    text << "dimension: " << basis.integrals.size() << "\n";
    json list = json::array();
    for (const auto& h : basis.integrals) {
      list.push_back(expr::print(h));
      text << expr::print(h) << "\n";
    }
    doc["integrals"] = std::move(list);
    if (*find_rank) {
      std::size_t rank = integral_rank(basis, global.seed);
      doc["rank"] = rank;
      text << "rank: " << rank << "\n";
    }
    exit_code = emit(global, doc, text.str());
  });

  auto* verify_cmd = integrals_cmd->add_subcommand("verify", "check X(H) = 0");
  auto verify_src = std::make_shared<cli::FieldSource>();
  auto verify_order = std::make_shared<unsigned>(0);
  auto verify_expr = std::make_shared<std::string>();
  add_field_options(verify_cmd, *verify_src);
  verify_cmd->add_option("--order", *verify_order, "prolongation order");
  verify_cmd->add_option("--expr", *verify_expr, "candidate first integral")->required();
  verify_cmd->callback([&, verify_src, verify_order, verify_expr] {
    VectorField base = verify_src->build();
    VectorField x = prolonged(base, *verify_order);
    expr::ParseContext ctx{base.chart(), true};
    VerifyResult v = verify_first_integral(x, expr::parse_rational(*verify_expr, ctx));
    json doc;
    doc["pass"] = v.pass;
    if (v.pass) {
      exit_code = emit(global, doc, "ok\n");
    } else {
      doc["residue"] = expr::print(v.residue);
      emit(global, doc, "FAIL: residue = " + expr::print(v.residue) + "\n");
      exit_code = 1;
    }
  });

  // dimpoly ---------------------------------------------------------------------
  auto* dimpoly_cmd = app.add_subcommand("dimpoly", "Kolchin dimension polynomials");
  dimpoly_cmd->require_subcommand(1);
  auto* fit_cmd = dimpoly_cmd->add_subcommand("fit", "fit samples 'k=dim,k=dim,...'");
  auto fit_samples = std::make_shared<std::string>();
  auto fit_max_type = std::make_shared<unsigned>(1000000);
  fit_cmd->add_option("--samples", *fit_samples, "samples 'k=dim,...'")->required();
  fit_cmd->add_option("--max-type", *fit_max_type, "cap on the differential type");
  fit_cmd->callback([&, fit_samples, fit_max_type] {
    std::vector<std::pair<long, long>> samples;
    for (const auto& part : cli::split_names(*fit_samples)) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        raise(errc::invalid_argument, "expected 'k=dim' in --samples");
      samples.push_back({std::stol(part.substr(0, eq)), std::stol(part.substr(eq + 1))});
    }
    DimensionPolynomial p = fit_dimension_polynomial(samples, *fit_max_type);
    json doc;
    doc["coeffs"] = p.coeffs;
    doc["type"] = p.type;
    std::ostringstream text;
    text << "coeffs: (";
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      text << (i ? ", " : "") << p.coeffs[i];
    text << ")\ntype: " << p.type << "\n";
    exit_code = emit(global, doc, text.str());
  });

  // report-dimensions -------------------------------------------------------------
  auto* report_cmd =
      app.add_subcommand("report-dimensions", "frame/gamma/aut dimension table");
  auto rep_m = std::make_shared<std::size_t>();
  auto rep_d = std::make_shared<std::size_t>();
  auto rep_range = std::make_shared<std::string>();
  auto rep_fit = std::make_shared<bool>(false);
  report_cmd->add_option("m", *rep_m, "fiber dimension")->required();
  report_cmd->add_option("d", *rep_d, "parameter dimension")->required();
  report_cmd->add_option("range", *rep_range, "order range 'k1..k2'")->required();
  report_cmd->add_flag("--fit", *rep_fit, "fit the aut dimension column");
  report_cmd->callback([&, rep_m, rep_d, rep_range, rep_fit] {
    auto dots = rep_range->find("..");
    if (dots == std::string::npos)
      raise(errc::invalid_argument, "range must look like '2..6'");
    long k1 = std::stol(rep_range->substr(0, dots));
    long k2 = std::stol(rep_range->substr(dots + 2));
    if (k1 < 0 || k2 < k1) raise(errc::invalid_argument, "empty or negative range");
    json rows = json::array();
    std::ostringstream text;
    text << "k frame gamma aut\n";
    std::vector<std::pair<long, long>> samples;
    for (long k = k1; k <= k2; ++k) {
      long fd = frame_dim(*rep_m, *rep_d, (unsigned)k);
      long gd = gamma_dim(*rep_m, (unsigned)k);
      long ad = aut_dim(*rep_m, *rep_d, (unsigned)k);
      samples.push_back({k, ad});
      rows.push_back(json{{"k", k}, {"frame", fd}, {"gamma", gd}, {"aut", ad}});
      text << k << " " << fd << " " << gd << " " << ad << "\n";
    }
    json doc;
    doc["rows"] = std::move(rows);
    if (*rep_fit) {
      DimensionPolynomial p = fit_dimension_polynomial(samples, (unsigned)*rep_m);
      doc["fit"] = json{{"coeffs", p.coeffs}, {"type", p.type}};
      text << "fit coeffs: (";
      for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        text << (i ? ", " : "") << p.coeffs[i];
      text << "), type " << p.type << "\n";
    }
    exit_code = emit(global, doc, text.str());
  });

  // painleve ------------------------------------------------------------------
  auto* pain_cmd = app.add_subcommand("painleve", "the Painleve catalog");
  pain_cmd->require_subcommand(1);

  auto* pf_cmd = pain_cmd->add_subcommand("field", "print a catalog field");
  auto pf_id = std::make_shared<std::string>();
  auto pf_set = std::make_shared<std::string>();
  pf_cmd->add_option("id", *pf_id, "equation I..VI")->required();
  pf_cmd->add_option("--set", *pf_set, "parameter values 'alpha=0;...'");
  pf_cmd->callback([&, pf_id, pf_set] {
    painleve::Id id = painleve::id_from_string(*pf_id);
    VectorField x = pf_set->empty()
                        ? painleve::field(id)
                        : painleve::field(id, cli::parse_scalar_assignments(*pf_set));
    exit_code = emit(global, field_json(x), expr::print_field(x) + "\n");
  });

  auto* pv_cmd = pain_cmd->add_subcommand("verify-volume", "check L_X (dx^du^dv) = 0");
  auto pv_id = std::make_shared<std::string>();
  pv_cmd->add_option("id", *pv_id, "equation I..VI")->required();
  pv_cmd->callback([&, pv_id] {
    painleve::Id id = painleve::id_from_string(*pv_id);
    bool ok = painleve::verify_volume(id);
    json doc{{"id", painleve::name(id)}, {"pass", ok}};
    std::string text = std::string("L_X(d(x) /\\ d(u) /\\ d(v)) = 0: ") +
                       (ok ? "OK" : "FAIL") + "\n";
    emit(global, doc, text);
    exit_code = ok ? 0 : 1;
  });

  auto* ph_cmd = pain_cmd->add_subcommand("verify-hamiltonian",
                                          "check the Hamiltonian conjugation identity");
  auto ph_id = std::make_shared<std::string>();
  auto ph_map = std::make_shared<std::string>();
  ph_cmd->add_option("id", *ph_id, "equation III..VI")->required();
  ph_cmd->add_option("--map", *ph_map, "parameter map 'alpha=...;beta=...'");
  ph_cmd->callback([&, ph_id, ph_map] {
    painleve::Id id = painleve::id_from_string(*ph_id);
    std::map<Symbol, RationalFunction> pm;
    if (ph_map->empty()) {
      pm = painleve::derive_param_map(id).images;
    } else {
      expr::ParseContext ctx{painleve::hamiltonian_chart(), false};
      pm = cli::parse_assignments(ctx, *ph_map);
    }
    painleve::HamiltonianCheck chk = painleve::verify_hamiltonian(id, pm);
    json doc{{"id", painleve::name(id)}, {"pass", chk.pass}};
    std::ostringstream text;
    if (chk.pass) {
      text << "H_vx + H_v*H_vu - H_u*H_vv = F(x, u, H_v): OK\n";
    } else {
      doc["residue"] = expr::print(chk.residue);
      text << "FAIL: residue = " << expr::print(chk.residue) << "\n";
    }
    emit(global, doc, text.str());
    exit_code = chk.pass ? 0 : 1;
  });

  auto* pc_cmd = pain_cmd->add_subcommand("verify-confluence",
                                          "check a degeneration edge");
  auto pc_src = std::make_shared<std::string>();
  auto pc_dst = std::make_shared<std::string>();
  pc_cmd->add_option("source", *pc_src, "source equation")->required();
  pc_cmd->add_option("target", *pc_dst, "target equation")->required();
  pc_cmd->callback([&, pc_src, pc_dst] {
    painleve::Id src = painleve::id_from_string(*pc_src);
    painleve::Id dst = painleve::id_from_string(*pc_dst);
    painleve::ConfluenceCheck chk =
        painleve::verify_confluence(painleve::confluence(src, dst));
    json doc{{"source", painleve::name(src)},
             {"target", painleve::name(dst)},
             {"pass", chk.pass}};
    std::ostringstream text;
    if (chk.pass) {
      text << "Y|_{epsilon=0} = X_" << painleve::name(dst) << ": OK\n";
    } else {
      doc["detail"] = chk.detail;
      text << "FAIL: " << chk.detail << "\n";
    }
    emit(global, doc, text.str());
    exit_code = chk.pass ? 0 : 1;
  });

  auto* pd_cmd = pain_cmd->add_subcommand("derive-param-map",
                                          "solve for the Hamiltonian parameter map");
  auto pd_id = std::make_shared<std::string>();
  pd_cmd->add_option("id", *pd_id, "equation III..VI")->required();
  pd_cmd->callback([&, pd_id] {
    painleve::Id id = painleve::id_from_string(*pd_id);
    painleve::ParamMap pm = painleve::derive_param_map(id);
    json doc;
    std::ostringstream text;
    doc["id"] = painleve::name(id);
    doc["unique"] = pm.unique;
    json images;
    for (const auto& p : painleve::equation_chart(id).params()) {
      images[p.name()] = expr::print(pm.images.at(p));
      text << p.name() << " = " << expr::print(pm.images.at(p)) << "\n";
    }
    doc["map"] = std::move(images);
    text << (pm.unique ? "unique solution\n" : "one solution branch\n");
    exit_code = emit(global, doc, text.str());
  });

  auto* cat_cmd = pain_cmd->add_subcommand("dump-catalog", "print the catalog fixture");
  cat_cmd->callback([&] {
    std::cout << painleve::catalog_text();
    exit_code = 0;
  });

  // jobfile -------------------------------------------------------------------
  auto* job_cmd = app.add_subcommand("jobfile", "structured verification jobs");
  job_cmd->require_subcommand(1);
  auto* job_run = job_cmd->add_subcommand("run", "run every task in a job file");
  auto job_path = std::make_shared<std::string>();
  job_run->add_option("path", *job_path, "job file (JSON)")->required();
  job_run->callback([&, job_path] {
    cli::JobReport report = cli::run_job_file(*job_path);
    if (global.json_mode)
      std::cout << cli::render_job_json(report);
    else
      std::cout << cli::render_job_text(report);
    exit_code = report.ok() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e, std::cout, std::cerr);
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
