#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "ncg/analysis.hpp"
#include "ncg/catalog.hpp"
#include "ncg/closed_forms.hpp"
#include "ncg/groups.hpp"
#include "ncg/integrality.hpp"
#include "ncg/report.hpp"
#include "ncg/verify.hpp"

namespace py = pybind11;
using namespace ncg;

namespace {

FormulaFamily family_from_name(const std::string& name) {
  static const std::map<std::string, FormulaFamily> m = {
      {"Dihedral", FormulaFamily::Dihedral},
      {"Quasidihedral", FormulaFamily::Quasidihedral},
      {"M2rs", FormulaFamily::M2rs},
      {"Dicyclic", FormulaFamily::Dicyclic},
      {"U6n", FormulaFamily::U6n},
      {"QuotientDihedral", FormulaFamily::QuotientDihedral},
      {"QuotientZpZp", FormulaFamily::QuotientZpZp},
      {"QuotientSz2", FormulaFamily::QuotientSz2},
      {"HanakiV", FormulaFamily::HanakiV},
      {"HanakiP", FormulaFamily::HanakiP},
      {"SD8n", FormulaFamily::SD8n},
      {"V8n", FormulaFamily::V8n},
      {"Frobenius", FormulaFamily::Frobenius},
  };
  auto it = m.find(name);
  if (it == m.end()) throw py::value_error("unknown family " + name);
  return it->second;
}

SquareKind kind_from_name(const std::string& name) {
  auto k = parse_square_kind(name);
  if (!k) throw py::value_error("unknown square kind " + name);
  return *k;
}

std::string closed_form_json(const std::string& family, const std::vector<long>& params) {
  const FamilyFormula f{family_from_name(family), params};
  const ClosedFormReport r = closed_form_report(f);
  json j;
  j["theorem"] = theorem_id(f);
  j["shape"] = expected_shape(f).str();
  j["qspec"] = spectrum_json(r.qspec);
  j["E"] = surd_expr_json(r.E);
  j["LE"] = surd_expr_json(r.LE);
  j["LEplus"] = surd_expr_json(r.LEplus);
  j["values"] = {{"E", r.E.to_double()}, {"LE", r.LE.to_double()}, {"LEplus", r.LEplus.to_double()}};
  j["text"] = {{"E", r.E.str()}, {"LE", r.LE.str()}, {"LEplus", r.LEplus.str()}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Non-commuting graph spectra and energies of finite groups";

  m.def(
      "analyze_json",
      [](const std::string& spec, double tol) {
        AnalyzeOptions ao;
        ao.tol = tol;
        Analysis a;
        {
          py::gil_scoped_release release;
          a = analyze_group(parse_group_spec(spec), ao);
        }
        return analysis_json(a).dump();
      },
      py::arg("spec"), py::arg("tol") = 1e-9);

  m.def(
      "verify_json",
      [](const std::string& selector, bool small, int threads) {
        VerifyOptions opts;
        opts.threads = threads;
        std::vector<VerifyOutcome> out;
        {
          py::gil_scoped_release release;
          if (selector == "all") {
            out = verify_all(small, opts);
          } else if (selector == "com") {
            out = verify_planar(opts);
          } else if (selector == "toroidal") {
            out = verify_toroidal(opts);
          } else if (selector == "pq-sweep") {
            out = verify_frobenius_sweep(500, opts);
          } else if (const TheoremInfo* t = find_theorem(selector)) {
            out = verify_formulas(t->desk_suite, opts);
          } else {
            throw std::invalid_argument("unknown selector " + selector);
          }
        }
        return verify_report_json(out, false).dump();
      },
      py::arg("selector"), py::arg("small") = true, py::arg("threads") = 1);

  m.def("closed_form_json", &closed_form_json, py::arg("family"), py::arg("params"));

  m.def(
      "square_sequence",
      [](const std::string& kind, long bound, int threads) {
        std::vector<std::pair<long, std::string>> out;
        for (const auto& h : square_sequence(kind_from_name(kind), bound, threads)) out.emplace_back(h.n, to_string(h.root));
        return out;
      },
      py::arg("kind"), py::arg("bound"), py::arg("threads") = 1);

  m.def(
      "square_value",
      [](const std::string& kind, long n) { return to_string(square_value(kind_from_name(kind), n)); },
      py::arg("kind"), py::arg("n"));

  m.def(
      "is_perfect_square",
      [](const std::string& k) -> std::optional<std::string> {
        BigInt v;
        if (v.set_str(k, 10) != 0) throw py::value_error("not an integer: " + k);
        auto r = is_perfect_square(v);
        if (!r) return std::nullopt;
        return to_string(*r);
      },
      py::arg("k"));

  m.def("theorem_ids", [] {
    std::vector<std::string> ids;
    for (const auto& t : theorem_catalog()) ids.push_back(t.id);
    return ids;
  });

  m.def(
      "graph_edges",
      [](const std::string& spec) {
        const NCGraph g = noncommuting_graph(build_group(parse_group_spec(spec)));
        std::vector<std::pair<long, long>> edges;
        for (long i = 0; i < g.n(); ++i)
          for (long j = i + 1; j < g.n(); ++j)
            if (g.adj.get(i, j)) edges.emplace_back(i, j);
        return py::make_tuple(g.n(), edges);
      },
      py::arg("spec"));

  py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<AbelianGroup>(m, "AbelianGroup", PyExc_ArithmeticError);
  py::register_exception<NegativeInput>(m, "NegativeInput", PyExc_ValueError);
  py::register_exception<ParameterOutOfTheoremRange>(m, "ParameterOutOfTheoremRange", PyExc_ValueError);
}
