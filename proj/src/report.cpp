#include "ncg/report.hpp"

#include <ostream>
#include <sstream>

namespace ncg {

namespace {

Rational rational_from(const json& j) {
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw ReportParseError("bad rational: " + j.get<std::string>());
  return *r;
}

BigInt bigint_from(const json& j) {
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw ReportParseError("bad integer: " + j.get<std::string>());
  return v;
}

json numeric_json(const std::optional<NumericSpectrum>& s) {
  if (!s) return nullptr;
  return s->values;
}

std::optional<NumericSpectrum> numeric_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  NumericSpectrum s;
  s.values = j.get<std::vector<double>>();
  return s;
}

json exact_json(const std::optional<ExactSpectrum>& s) {
  if (!s) return nullptr;
  return spectrum_json(*s);
}

std::optional<ExactSpectrum> exact_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return spectrum_from_json(j);
}

json energy_json(const EnergyValue& v) {
  json j;
  j["value"] = v.value;
  j["exact"] = v.exact ? surd_expr_json(*v.exact) : json(nullptr);
  j["text"] = v.str();
  return j;
}

EnergyValue energy_from(const json& j) {
  EnergyValue v;
  v.value = j.at("value").get<double>();
  if (!j.at("exact").is_null()) v.exact = surd_expr_from_json(j.at("exact"));
  return v;
}

Relation relation_from(const std::string& s) {
  if (s == "<") return Relation::Less;
  if (s == "=") return Relation::Equal;
  if (s == ">") return Relation::Greater;
  throw ReportParseError("bad relation: " + s);
}

json comparison_json(const Comparison& c) { return {{"rel", relation_symbol(c.rel)}, {"exact", c.exact}}; }

Comparison comparison_from(const json& j) {
  return {relation_from(j.at("rel").get<std::string>()), j.at("exact").get<bool>()};
}

Status status_from(const std::string& s) {
  for (Status st : {Status::Pass, Status::Fail, Status::Discrepancy, Status::Skip})
    if (s == status_name(st)) return st;
  throw ReportParseError("bad status: " + s);
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

json surd_expr_json(const SurdExpr& e) {
  json out = json::array();
  for (const auto& [radicand, coeff] : e.terms()) out.push_back({{"radicand", to_string(radicand)}, {"coeff", to_string(coeff)}});
  return out;
}

SurdExpr surd_expr_from_json(const json& j) {
  try {
    SurdExpr e;
    for (const auto& t : j) e += SurdExpr::sqrt_of(bigint_from(t.at("radicand")), rational_from(t.at("coeff")));
    return e;
  } catch (const json::exception& e) {
    throw ReportParseError(e.what());
  }
}

json spectrum_json(const ExactSpectrum& s) {
  json out = json::array();
  for (const auto& [v, mult] : s.entries)
    out.push_back({{"a", to_string(v.a())},
                   {"b", to_string(v.b())},
                   {"d", to_string(v.d())},
                   {"mult", mult},
                   {"value", v.to_double()}});
  return out;
}

ExactSpectrum spectrum_from_json(const json& j) {
  try {
    ExactSpectrum s;
    for (const auto& e : j)
      s.entries.emplace_back(SurdValue::make(rational_from(e.at("a")), rational_from(e.at("b")), bigint_from(e.at("d"))),
                             e.at("mult").get<long>());
    return s;
  } catch (const json::exception& e) {
    throw ReportParseError(e.what());
  }
}

json analysis_json(const Analysis& a) {
  json j;
  j["spec"] = a.spec;
  j["group_order"] = a.group_order;
  j["center_size"] = a.center_size;
  if (a.shape) {
    json parts = json::array();
    for (auto [size, count] : a.shape->parts) parts.push_back({size, count});
    j["shape"] = {{"parts", parts}, {"text", a.shape->str()}};
  } else {
    j["shape"] = nullptr;
  }
  j["exact_source"] = a.exact_source;
  j["spectra"] = {
      {"A", {{"exact", exact_json(a.a_exact)}, {"numeric", numeric_json(a.a_num)}}},
      {"L", {{"exact", exact_json(a.l_exact)}, {"numeric", numeric_json(a.l_num)}}},
      {"Q", {{"exact", exact_json(a.q_exact)}, {"numeric", numeric_json(a.q_num)}}},
  };
  const EnergyReport& r = a.energies;
  j["energies"] = {{"n_vertices", r.n_vertices},
                   {"n_edges", r.n_edges},
                   {"mean_degree", to_string(r.mean_degree)},
                   {"E", energy_json(r.E)},
                   {"LE", energy_json(r.LE)},
                   {"LEplus", energy_json(r.LEplus)}};
  j["flags"] = {{"hypoenergetic", r.flags.hypoenergetic},
                {"hyperenergetic", r.flags.hyperenergetic},
                {"l_hyper", r.flags.l_hyper},
                {"q_hyper", r.flags.q_hyper}};
  j["ordering"] = {{"e_vs_leplus", comparison_json(r.ordering.e_vs_leplus)},
                   {"leplus_vs_le", comparison_json(r.ordering.leplus_vs_le)},
                   {"e_vs_le", comparison_json(r.ordering.e_vs_le)},
                   {"text", r.ordering.str()}};
  j["q_integral"] = a.q_integral;
  j["q_integral_exact"] = a.q_integral_exact;
  json checks = json::array();
  for (const auto& c : a.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"delta", c.delta}});
  j["checks"] = checks;
  return j;
}

Analysis analysis_from_json(const json& j) {
  try {
    Analysis a;
    a.spec = j.at("spec").get<std::string>();
    a.group_order = j.at("group_order").get<long>();
    a.center_size = j.at("center_size").get<long>();
    if (!j.at("shape").is_null()) {
      MultipartiteShape s;
      for (const auto& p : j.at("shape").at("parts")) s.parts.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
      a.shape = s;
    }
    a.exact_source = j.at("exact_source").get<std::string>();
    const json& sp = j.at("spectra");
    a.a_exact = exact_from(sp.at("A").at("exact"));
    a.l_exact = exact_from(sp.at("L").at("exact"));
    a.q_exact = exact_from(sp.at("Q").at("exact"));
    a.a_num = numeric_from(sp.at("A").at("numeric"));
    a.l_num = numeric_from(sp.at("L").at("numeric"));
    a.q_num = numeric_from(sp.at("Q").at("numeric"));
    const json& e = j.at("energies");
    EnergyReport& r = a.energies;
    r.n_vertices = e.at("n_vertices").get<long>();
    r.n_edges = e.at("n_edges").get<long>();
    r.mean_degree = rational_from(e.at("mean_degree"));
    r.E = energy_from(e.at("E"));
    r.LE = energy_from(e.at("LE"));
    r.LEplus = energy_from(e.at("LEplus"));
    const json& f = j.at("flags");
    r.flags.hypoenergetic = f.at("hypoenergetic").get<bool>();
    r.flags.hyperenergetic = f.at("hyperenergetic").get<bool>();
    r.flags.l_hyper = f.at("l_hyper").get<bool>();
    r.flags.q_hyper = f.at("q_hyper").get<bool>();
    const json& o = j.at("ordering");
    r.ordering.e_vs_leplus = comparison_from(o.at("e_vs_leplus"));
    r.ordering.leplus_vs_le = comparison_from(o.at("leplus_vs_le"));
    r.ordering.e_vs_le = comparison_from(o.at("e_vs_le"));
    a.q_integral = j.at("q_integral").get<bool>();
    a.q_integral_exact = j.at("q_integral_exact").get<bool>();
    for (const auto& c : j.at("checks"))
      a.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("lhs").get<std::string>(),
                          c.at("rhs").get<std::string>(), c.at("delta").get<double>()});
    return a;
  } catch (const json::exception& e) {
    throw ReportParseError(e.what());
  }
}

json outcome_json(const VerifyOutcome& o) {
  json checks = json::array();
  for (const auto& c : o.checks)
    checks.push_back({{"name", c.name},
                      {"status", status_name(c.status)},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"delta", c.delta},
                      {"note", c.note}});
  return {{"theorem", o.theorem}, {"params", o.params}, {"status", status_name(o.overall())}, {"checks", checks}};
}

VerifyOutcome outcome_from_json(const json& j) {
  try {
    VerifyOutcome o{j.at("theorem").get<std::string>(), j.at("params").get<std::string>(), {}};
    for (const auto& c : j.at("checks"))
      o.checks.push_back({c.at("name").get<std::string>(), status_from(c.at("status").get<std::string>()),
                          c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>(), c.at("delta").get<double>(),
                          c.at("note").get<std::string>()});
    return o;
  } catch (const json::exception& e) {
    throw ReportParseError(e.what());
  }
}

json verify_report_json(const std::vector<VerifyOutcome>& outcomes, bool strict) {
  const VerifySummary s = summarize(outcomes);
  json list = json::array();
  for (const auto& o : outcomes) list.push_back(outcome_json(o));
  return {{"outcomes", list},
          {"summary",
           {{"pass", s.pass}, {"fail", s.fail}, {"discrepancy", s.discrepancy}, {"skip", s.skip},
            {"exit_code", verify_exit_code(s, strict)}}}};
}

json squares_json(SquareKind kind, long bound, const std::vector<SquareHit>& hits) {
  json rows = json::array();
  for (const auto& h : hits) rows.push_back({{"n", h.n}, {"root", to_string(h.root)}});
  return {{"kind", square_kind_name(kind)}, {"bound", bound}, {"hits", rows}};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_analysis_csv(std::ostream& os, const std::vector<Analysis>& rows) {
  os << "spec,n,m,E,LE,LEplus,hypo,hyper,Lhyper,Qhyper,ordering,q_integral\n";
  for (const auto& a : rows) {
    const EnergyReport& r = a.energies;
    os << csv_escape(a.spec) << ',' << r.n_vertices << ',' << r.n_edges << ',' << num(r.E.value) << ','
       << num(r.LE.value) << ',' << num(r.LEplus.value) << ',' << yn(r.flags.hypoenergetic) << ','
       << yn(r.flags.hyperenergetic) << ',' << yn(r.flags.l_hyper) << ',' << yn(r.flags.q_hyper) << ','
       << csv_escape(r.ordering.str()) << ',' << yn(a.q_integral) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<std::pair<std::string, Analysis>>& rows) {
  os << "param,n_vertices,n_edges,E,LEplus,LE,hypo,hyper,Lhyper,Qhyper,Qintegral\n";
  for (const auto& [param, a] : rows) {
    const EnergyReport& r = a.energies;
    os << csv_escape(param) << ',' << r.n_vertices << ',' << r.n_edges << ',' << num(r.E.value) << ','
       << num(r.LEplus.value) << ',' << num(r.LE.value) << ',' << yn(r.flags.hypoenergetic) << ','
       << yn(r.flags.hyperenergetic) << ',' << yn(r.flags.l_hyper) << ',' << yn(r.flags.q_hyper) << ','
       << yn(a.q_integral) << '\n';
  }
}

void write_verify_csv(std::ostream& os, const std::vector<VerifyOutcome>& outcomes) {
  os << "theorem,params,check,status,lhs,rhs,delta,note\n";
  for (const auto& o : outcomes)
    for (const auto& c : o.checks)
      os << csv_escape(o.theorem) << ',' << csv_escape(o.params) << ',' << csv_escape(c.name) << ','
         << status_name(c.status) << ',' << csv_escape(c.lhs) << ',' << csv_escape(c.rhs) << ',' << num(c.delta) << ','
         << csv_escape(c.note) << '\n';
}

void write_squares_csv(std::ostream& os, const std::vector<SquareHit>& hits) {
  os << "n,root\n";
  for (const auto& h : hits) os << h.n << ',' << to_string(h.root) << '\n';
}

}  // namespace ncg
