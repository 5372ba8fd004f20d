#include "jobfile.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli_common.hpp"
#include "jetgal/dimension_polynomial.hpp"
#include "jetgal/first_integrals.hpp"

namespace jetgal::cli {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  raise(errc::invalid_argument, "job file: " + what);
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto& a : allowed)
      if (key == a) { known = true; break; }
    if (!known) schema_error("unknown key '" + key + "' in " + where);
  }
}

std::string need_string(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string())
    schema_error("missing string '" + key + "' in " + where);
  return obj[key].get<std::string>();
}

struct JobContext {
  std::optional<Chart> chart;
  std::map<std::string, VectorField> fields;

  VectorField resolve_field(const std::string& ref) const {
    if (ref.rfind("painleve:", 0) == 0)
      return painleve::field(painleve::id_from_string(ref.substr(9)));
    auto it = fields.find(ref);
    if (it == fields.end())
      schema_error("task references undefined field '" + ref + "'");
    return it->second;
  }
};

VectorField prolonged(const VectorField& x, long order) {
  if (order <= 0) return x;
  return prolong_frame(x, JetContext(x.chart(), (unsigned)order));
}

std::map<Symbol, RationalFunction> param_map_from_json(painleve::Id id, const json& obj) {
  expr::ParseContext ctx{painleve::hamiltonian_chart(), false};
  std::map<Symbol, RationalFunction> pm;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) schema_error("parameter map values must be expressions");
    pm.emplace(Symbol(key), expr::parse_rational(value.get<std::string>(), ctx));
  }
  return pm;
}

TaskResult run_task(const json& task, const JobContext& jc, std::size_t index) {
  if (!task.is_object()) schema_error("tasks must be objects");
  std::string where = "task #" + std::to_string(index + 1);
  std::string op = need_string(task, "op", where);
  std::string expected = task.contains("expect")
                             ? need_string(task, "expect", where)
                             : std::string("pass");
  if (expected != "pass" && expected != "fail")
    schema_error("expect must be 'pass' or 'fail' in " + where);

  TaskResult r;
  r.expected = expected;

  if (op == "painleve-verify-volume") {
    reject_unknown_keys(task, {"op", "expect", "id"}, where);
    painleve::Id id = painleve::id_from_string(need_string(task, "id", where));
    r.label = "verify-volume " + std::string(painleve::name(id));
    r.outcome = painleve::verify_volume(id) ? "pass" : "fail";
    return r;
  }

  if (op == "painleve-verify-hamiltonian") {
    reject_unknown_keys(task, {"op", "expect", "id", "map", "hamiltonian"}, where);
    painleve::Id id = painleve::id_from_string(need_string(task, "id", where));
    r.label = "verify-hamiltonian " + std::string(painleve::name(id));
    std::map<Symbol, RationalFunction> pm;
    if (task.contains("map")) {
      if (!task["map"].is_object()) schema_error("'map' must be an object in " + where);
      pm = param_map_from_json(id, task["map"]);
    } else {
      pm = painleve::derive_param_map(id).images;
    }
    painleve::HamiltonianCheck chk;
    if (task.contains("hamiltonian")) {
      expr::ParseContext ctx{painleve::hamiltonian_chart(), false};
      RationalFunction h =
          expr::parse_rational(need_string(task, "hamiltonian", where), ctx);
      chk = painleve::verify_hamiltonian_candidate(id, h, pm);
    } else {
      chk = painleve::verify_hamiltonian(id, pm);
    }
    r.outcome = chk.pass ? "pass" : "fail";
    if (!chk.pass) r.detail = "residue = " + expr::print(chk.residue);
    return r;
  }

  if (op == "painleve-verify-confluence") {
    reject_unknown_keys(task, {"op", "expect", "source", "target"}, where);
    painleve::Id src = painleve::id_from_string(need_string(task, "source", where));
    painleve::Id dst = painleve::id_from_string(need_string(task, "target", where));
    r.label = std::string("verify-confluence ") + painleve::name(src) + " -> " +
              painleve::name(dst);
    painleve::ConfluenceCheck chk =
        painleve::verify_confluence(painleve::confluence(src, dst));
    r.outcome = chk.pass ? "pass" : "fail";
    r.detail = chk.detail;
    return r;
  }

  if (op == "painleve-derive-param-map") {
    reject_unknown_keys(task, {"op", "expect", "id"}, where);
    painleve::Id id = painleve::id_from_string(need_string(task, "id", where));
    r.label = "derive-param-map " + std::string(painleve::name(id));
    painleve::ParamMap pm = painleve::derive_param_map(id);
    bool round_trip = painleve::verify_hamiltonian(id, pm.images).pass;
    r.outcome = round_trip ? "pass" : "fail";
    std::ostringstream os;
    for (const auto& p : painleve::equation_chart(id).params())
      os << p.name() << " = " << expr::print(pm.images.at(p)) << "; ";
    r.detail = os.str();
    return r;
  }

  if (op == "verify-integral") {
    reject_unknown_keys(task, {"op", "expect", "field", "order", "expr"}, where);
    VectorField base = jc.resolve_field(need_string(task, "field", where));
    long order = task.contains("order") ? task["order"].get<long>() : 0;
    VectorField x = prolonged(base, order);
    expr::ParseContext ctx{base.chart(), true};
    RationalFunction h = expr::parse_rational(need_string(task, "expr", where), ctx);
    r.label = "verify-integral " + need_string(task, "field", where) + " '" +
              need_string(task, "expr", where) + "'";
    VerifyResult v = verify_first_integral(x, h);
    r.outcome = v.pass ? "pass" : "fail";
    if (!v.pass) r.detail = "residue = " + expr::print(v.residue);
    return r;
  }

  if (op == "find-integrals") {
    reject_unknown_keys(task,
                        {"op", "expect", "field", "order", "degree", "denominator",
                         "jmax", "expect_dimension", "contains"},
                        where);
    VectorField base = jc.resolve_field(need_string(task, "field", where));
    long order = task.contains("order") ? task["order"].get<long>() : 0;
    VectorField x = prolonged(base, order);
    if (!task.contains("degree")) schema_error("missing 'degree' in " + where);
    unsigned degree = task["degree"].get<unsigned>();
    expr::ParseContext ctx{base.chart(), true};
    FirstIntegralBasis basis;
    if (task.contains("denominator")) {
      RationalFunction q =
          expr::parse_rational(need_string(task, "denominator", where), ctx);
      if (!q.is_polynomial()) schema_error("denominator must be a polynomial");
      unsigned jmax = task.contains("jmax") ? task["jmax"].get<unsigned>() : 1;
      basis = find_fixed_denominator_integrals(x, q.num(), degree, jmax);
    } else {
      basis = find_polynomial_integrals(x, degree);
    }
    r.label = "find-integrals " + need_string(task, "field", where);
    bool ok = true;
    std::ostringstream os;
    os << "dimension = " << basis.integrals.size();
    if (task.contains("expect_dimension") &&
        basis.integrals.size() != task["expect_dimension"].get<std::size_t>()) {
      ok = false;
      os << " (expected " << task["expect_dimension"].get<std::size_t>() << ")";
    }
    if (task.contains("contains")) {
      for (const auto& item : task["contains"]) {
        RationalFunction h = expr::parse_rational(item.get<std::string>(), ctx);
        if (!in_span(basis.integrals, h, x.chart().fiber())) {
          ok = false;
          os << "; missing " << item.get<std::string>();
        }
      }
    }
    r.outcome = ok ? "pass" : "fail";
    r.detail = os.str();
    return r;
  }

  if (op == "fit-dimensions") {
    reject_unknown_keys(
        task, {"op", "expect", "m", "d", "from", "to", "expect_coeffs", "expect_type"},
        where);
    std::size_t m = task["m"].get<std::size_t>();
    std::size_t d = task["d"].get<std::size_t>();
    long from = task["from"].get<long>(), to = task["to"].get<long>();
    std::vector<std::pair<long, long>> samples;
    for (long k = from; k <= to; ++k) samples.push_back({k, aut_dim(m, d, (unsigned)k)});
    DimensionPolynomial p = fit_dimension_polynomial(samples, (unsigned)m);
    r.label = "fit-dimensions m=" + std::to_string(m) + " d=" + std::to_string(d);
    bool ok = true;
    if (task.contains("expect_type") && p.type != task["expect_type"].get<unsigned>())
      ok = false;
    if (task.contains("expect_coeffs")) {
      std::vector<long> want = task["expect_coeffs"].get<std::vector<long>>();
      if (p.coeffs != want) ok = false;
    }
    std::ostringstream os;
    os << "coeffs = (";
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      os << (i ? ", " : "") << p.coeffs[i];
    os << "), type = " << p.type;
    r.detail = os.str();
    r.outcome = ok ? "pass" : "fail";
    return r;
  }

  schema_error("unknown op '" + op + "' in " + where);
}

} // namespace

JobReport run_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) raise(errc::invalid_argument, "cannot open job file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    raise(errc::syntax_error, std::string("job file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  reject_unknown_keys(doc, {"schema_version", "description", "chart", "fields", "tasks"},
                      "the job file");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<long>() != 1)
    schema_error("schema_version must be the integer 1");
  if (!doc.contains("tasks") || !doc["tasks"].is_array())
    schema_error("missing 'tasks' array");

  JobContext jc;
  if (doc.contains("chart")) {
    const json& c = doc["chart"];
    reject_unknown_keys(c, {"fiber", "params", "extension"}, "'chart'");
    ChartOptions opts;
    if (!c.contains("fiber") || !c["fiber"].is_array())
      schema_error("'chart.fiber' must be an array of names");
    std::ostringstream fiber, params;
    for (const auto& n : c["fiber"]) fiber << n.get<std::string>() << ",";
    if (c.contains("params"))
      for (const auto& n : c["params"]) params << n.get<std::string>() << ",";
    opts.fiber = fiber.str();
    opts.params = params.str();
    if (c.contains("extension")) opts.extension = c["extension"].get<std::string>();
    jc.chart = opts.build();
  }
  if (doc.contains("fields")) {
    if (!jc.chart) schema_error("'fields' needs a 'chart'");
    if (!doc["fields"].is_object()) schema_error("'fields' must be an object");
    expr::ParseContext ctx{*jc.chart, true};
    for (const auto& [fname, coeffs] : doc["fields"].items()) {
      if (!coeffs.is_array() || coeffs.size() != jc.chart->fiber_dim())
        schema_error("field '" + fname + "' needs one expression per fiber coordinate");
      std::vector<RationalFunction> cs;
      for (const auto& e : coeffs) cs.push_back(expr::parse_rational(e.get<std::string>(), ctx));
      jc.fields.emplace(fname, VectorField(*jc.chart, std::move(cs)));
    }
  }

  JobReport report;
  std::size_t index = 0;
  for (const auto& task : doc["tasks"]) report.tasks.push_back(run_task(task, jc, index++));
  return report;
}

std::string render_job_text(const JobReport& report) {
  std::ostringstream os;
  std::size_t i = 0, passed = 0;
  for (const auto& t : report.tasks) {
    ++i;
    os << "[" << i << "/" << report.tasks.size() << "] "
       << (t.ok() ? "ok  " : "FAIL") << " " << t.label;
    if (!t.ok() && t.outcome != t.expected)
      os << " (outcome " << t.outcome << ", expected " << t.expected << ")";
    if (!t.detail.empty()) os << ": " << t.detail;
    os << "\n";
    if (t.ok()) ++passed;
  }
  os << "summary: " << passed << "/" << report.tasks.size() << " tasks as expected\n";
  return os.str();
}

std::string render_job_json(const JobReport& report) {
  json out = json::array();
  for (const auto& t : report.tasks) {
    json item;
    item["label"] = t.label;
    item["outcome"] = t.outcome;
    item["expected"] = t.expected;
    if (!t.detail.empty()) item["detail"] = t.detail;
    out.push_back(std::move(item));
  }
  json doc;
  doc["tasks"] = std::move(out);
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

} // namespace jetgal::cli
