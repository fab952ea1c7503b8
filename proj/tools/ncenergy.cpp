#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ncg/analysis.hpp"
#include "ncg/catalog.hpp"
#include "ncg/closed_forms.hpp"
#include "ncg/groups.hpp"
#include "ncg/integrality.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/report.hpp"
#include "ncg/spectra.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  bool json = false;
  std::string csv;
  double tol = 1e-9;
  int threads = 1;
};

// "7", "3..21", "3..21:odd", "2,4,9"
std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    std::string body = part, parity;
    if (auto colon = part.find(':'); colon != std::string::npos) {
      body = part.substr(0, colon);
      parity = part.substr(colon + 1);
      if (parity != "odd" && parity != "even") throw UsageError("bad parity filter in range '" + text + "'");
    }
    long lo = 0, hi = 0;
    try {
      std::size_t used = 0;
      if (auto dots = body.find(".."); dots != std::string::npos) {
        lo = std::stol(body.substr(0, dots), &used);
        if (used != dots) throw UsageError("");
        const std::string rest = body.substr(dots + 2);
        hi = std::stol(rest, &used);
        if (used != rest.size()) throw UsageError("");
      } else {
        lo = hi = std::stol(body, &used);
        if (used != body.size()) throw UsageError("");
      }
    } catch (const std::exception&) {
      throw UsageError("bad range '" + text + "' (expected a, a..b, a..b:odd or a..b:even)");
    }
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    if (hi - lo > 100000) throw UsageError("range '" + text + "' is too long");
    for (long v = lo; v <= hi; ++v) {
      if (parity == "odd" && v % 2 == 0) continue;
      if (parity == "even" && v % 2 != 0) continue;
      out.push_back(v);
    }
  }
  if (out.empty()) throw UsageError("range '" + text + "' selects nothing");
  return out;
}

using Ranges = std::map<std::string, std::string>;

void add_range_options(CLI::App* cmd, Ranges& ranges) {
  for (const char* name : {"m", "n", "r", "s", "p", "q", "z"})
    cmd->add_option(std::string("--") + name, ranges[name], std::string("range for parameter ") + name +
                                                                " (a, a..b, a..b:odd, a..b:even, or a comma list)");
}

// Cartesian product of the named parameter ranges, built in FamilyFormula order.
std::vector<FamilyFormula> tuples(FormulaFamily family, const std::vector<std::string>& names, const Ranges& ranges) {
  std::vector<std::vector<long>> values;
  for (const auto& nm : names) {
    auto it = ranges.find(nm);
    if (it == ranges.end() || it->second.empty()) throw UsageError("missing --" + nm);
    values.push_back(parse_range(it->second));
  }
  std::vector<FamilyFormula> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == values.size()) {
      out.push_back({family, cur});
      return;
    }
    for (long v : values[i]) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool any_range(const Ranges& ranges) {
  for (const auto& [k, v] : ranges)
    if (!v.empty()) return true;
  return false;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string spectrum_text(const std::optional<ExactSpectrum>& exact, const std::optional<NumericSpectrum>& num) {
  if (exact) return exact->str();
  if (!num) return "(not computed)";
  std::ostringstream os;
  os.precision(12);
  os << "{";
  bool first = true;
  const double scale = num->values.empty() ? 1.0 : std::max(1.0, std::fabs(num->values.front()));
  for (auto [v, mult] : num->grouped()) {
    if (std::fabs(v) < 1e-9 * scale) v = 0.0;
    os << (first ? "" : ", ") << "(" << v << ")^" << mult;
    first = false;
  }
  os << "} (numeric)";
  return os.str();
}

std::string energy_text(const EnergyValue& v) {
  std::ostringstream os;
  os.precision(15);
  if (v.exact && !v.exact->is_rational())
    os << v.exact->str() << " ~ " << v.value;
  else if (v.exact)
    os << v.exact->str();
  else
    os << v.value << " (numeric)";
  return os.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_analysis(const Analysis& a) {
  const EnergyReport& r = a.energies;
  std::cout << "group " << a.spec << "  order " << a.group_order << "  center " << a.center_size << "\n";
  std::cout << "graph " << r.n_vertices << " vertices, " << r.n_edges << " edges";
  if (a.shape) std::cout << ", " << a.shape->str();
  std::cout << "  (exact path: " << a.exact_source << ")\n";
  std::cout << "A-spec  " << spectrum_text(a.a_exact, a.a_num) << "\n";
  std::cout << "L-spec  " << spectrum_text(a.l_exact, a.l_num) << "\n";
  std::cout << "Q-spec  " << spectrum_text(a.q_exact, a.q_num) << "\n";
  std::cout << "E   = " << energy_text(r.E) << "\n";
  std::cout << "LE  = " << energy_text(r.LE) << "\n";
  std::cout << "LE+ = " << energy_text(r.LEplus) << "\n";
  std::cout << "ordering " << r.ordering.str() << "\n";
  std::cout << "hypoenergetic " << yn(r.flags.hypoenergetic) << ", hyperenergetic " << yn(r.flags.hyperenergetic)
            << ", L-hyperenergetic " << yn(r.flags.l_hyper) << ", Q-hyperenergetic " << yn(r.flags.q_hyper) << "\n";
  std::cout << "Q-integral " << yn(a.q_integral) << (a.q_integral_exact ? "" : " (numeric)") << "\n";
  long ok = 0;
  for (const auto& c : a.checks) {
    if (c.ok) {
      ++ok;
      continue;
    }
    std::cout << "check failed: " << c.name << "  " << c.lhs << " vs " << c.rhs << "\n";
  }
  std::cout << "checks " << ok << "/" << a.checks.size() << " pass\n";
}

void print_outcomes(const std::vector<VerifyOutcome>& outcomes, bool verbose) {
  for (const auto& o : outcomes) {
    std::cout << status_name(o.overall()) << "  " << o.theorem << "  " << o.params << "\n";
    for (const auto& c : o.checks) {
      if (!verbose && c.status == Status::Pass) continue;
      std::cout << "    " << status_name(c.status) << "  " << c.name << ": " << c.lhs << " | " << c.rhs;
      if (!c.note.empty()) std::cout << "  (" << c.note << ")";
      std::cout << "\n";
    }
  }
}

int cmd_analyze(const Globals& g, const std::vector<std::string>& specs, const std::string& emit_graph) {
  std::vector<GroupSpec> parsed;
  for (const auto& s : specs) parsed.push_back(parse_group_spec(s));
  AnalyzeOptions ao;
  ao.tol = g.tol;
  std::vector<Analysis> results;
  json docs = json::array();
  for (const auto& spec : parsed) {
    if (!emit_graph.empty()) {
      const NCGraph graph = noncommuting_graph(build_group(spec));
      const bool as_json = emit_graph.size() > 5 && emit_graph.substr(emit_graph.size() - 5) == ".json";
      write_file(emit_graph, as_json ? to_graph_json(graph) : to_edge_list(graph));
    }
    results.push_back(analyze_group(spec, ao));
    if (g.json) docs.push_back(analysis_json(results.back()));
  }
  if (g.json)
    std::cout << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
  else
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) std::cout << "\n";
      print_analysis(results[i]);
    }
  if (!g.csv.empty()) {
    std::ostringstream os;
    write_analysis_csv(os, results);
    write_file(g.csv, os.str());
  }
  for (const auto& a : results)
    if (!a.checks_pass()) return kExitVerify;
  return kExitOk;
}

struct VerifyArgs {
  std::string selector;
  Ranges ranges;
  std::string kind;
  long bound = 0;
  long max_pq = 500;
  bool small = false;
  bool strict = false;
  bool verbose = false;
};

std::vector<VerifyOutcome> run_verify(const Globals& g, const VerifyArgs& v) {
  VerifyOptions opts;
  opts.tol = g.tol;
  opts.threads = g.threads;
  const std::string& sel = v.selector;
  if (sel == "all") return verify_all(v.small, opts);
  if (sel == "com") return verify_planar(opts);
  if (sel == "toroidal") return verify_toroidal(opts);
  if (sel == "stated") {
    auto out = verify_stated_values(opts);
    auto more = verify_stated_spectra(opts);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }
  if (sel == "pq-sweep") return verify_frobenius_sweep(v.max_pq, opts);
  if (sel == "Table1") {
    std::vector<SquareKind> kinds;
    if (v.kind.empty()) {
      kinds = {SquareKind::K1, SquareKind::K2, SquareKind::K3};
    } else {
      auto k = parse_square_kind(v.kind);
      if (!k) throw UsageError("unknown square kind '" + v.kind + "'");
      kinds = {*k};
    }
    std::vector<VerifyOutcome> out;
    for (SquareKind k : kinds) out.push_back(verify_table1(k, v.bound > 0 ? v.bound : 10000, g.threads));
    return out;
  }
  const TheoremInfo* t = find_theorem(sel);
  if (!t) throw UsageError("unknown theorem '" + sel + "' (see 'ncenergy families')");
  std::vector<FamilyFormula> fs = t->desk_suite;
  if (any_range(v.ranges)) {
    fs = tuples(t->family, t->param_names, v.ranges);
    for (const auto& f : fs)
      if (theorem_id(f) != t->id) throw UsageError(f.str() + " is covered by " + theorem_id(f) + ", not " + t->id);
  }
  return verify_formulas(fs, opts);
}

int cmd_verify(const Globals& g, const VerifyArgs& v) {
  const std::vector<VerifyOutcome> outcomes = run_verify(g, v);
  const VerifySummary s = summarize(outcomes);
  const int code = verify_exit_code(s, v.strict);
  if (g.json) {
    std::cout << verify_report_json(outcomes, v.strict).dump(2) << "\n";
  } else {
    print_outcomes(outcomes, v.verbose);
    std::cout << "summary: " << s.str() << "\n";
  }
  if (!g.csv.empty()) {
    std::ostringstream os;
    write_verify_csv(os, outcomes);
    write_file(g.csv, os.str());
  }
  return code == 0 ? kExitOk : kExitVerify;
}

struct SweepFamily {
  FormulaFamily family;
  std::vector<std::string> params;
  const char* help;
};

const std::map<std::string, SweepFamily>& sweep_families() {
  static const std::map<std::string, SweepFamily> m = {
      {"D", {FormulaFamily::Dihedral, {"m"}, "dihedral D_2m"}},
      {"QD", {FormulaFamily::Quasidihedral, {"n"}, "quasidihedral QD_2^n"}},
      {"M", {FormulaFamily::M2rs, {"r", "s"}, "M_2rs"}},
      {"Q", {FormulaFamily::Dicyclic, {"n"}, "dicyclic Q_4n"}},
      {"U", {FormulaFamily::U6n, {"n"}, "U_6n"}},
      {"SD", {FormulaFamily::SD8n, {"n"}, "semidihedral SD_8n"}},
      {"V", {FormulaFamily::V8n, {"n"}, "V_8n"}},
      {"F", {FormulaFamily::Frobenius, {"p", "q"}, "Frobenius F_p,q"}},
      {"HV", {FormulaFamily::HanakiV, {"n"}, "Hanaki A(n, V)"}},
      {"HP", {FormulaFamily::HanakiP, {"n", "p"}, "Hanaki A(n, p)"}},
      {"D2m", {FormulaFamily::QuotientDihedral, {"m", "z"}, "G/Z(G) = D_2m"}},
      {"ZpZp", {FormulaFamily::QuotientZpZp, {"p", "z"}, "G/Z(G) = Z_p x Z_p"}},
      {"Sz", {FormulaFamily::QuotientSz2, {"z"}, "G/Z(G) = Sz(2)"}},
  };
  return m;
}

int cmd_sweep(const Globals& g, const std::string& family, const Ranges& ranges, bool brute) {
  auto it = sweep_families().find(family);
  if (it == sweep_families().end()) throw UsageError("unknown sweep family '" + family + "'");
  std::vector<FamilyFormula> fs;
  for (const auto& f : tuples(it->second.family, it->second.params, ranges)) {
    try {
      check_range(f);
      fs.push_back(f);
    } catch (const ParameterOutOfTheoremRange&) {
      // Ranges may cover values no theorem applies to, e.g. non-Frobenius pairs.
    }
  }
  VerifyOptions opts;
  opts.tol = g.tol;
  opts.threads = g.threads;
  std::vector<std::pair<std::string, Analysis>> rows;
  for (auto& [f, a] : sweep_formulas(fs, brute, opts)) rows.emplace_back(param_text(f), std::move(a));
  std::ostringstream os;
  write_sweep_csv(os, rows);
  if (g.json) {
    json list = json::array();
    for (const auto& [param, a] : rows) list.push_back({{"param", param}, {"analysis", analysis_json(a)}});
    std::cout << list.dump(2) << "\n";
  } else {
    std::cout << os.str();
  }
  if (!g.csv.empty() && (g.json || g.csv != "-")) write_file(g.csv, os.str());
  return kExitOk;
}

int cmd_squares(const Globals& g, const std::string& kind_text, long bound) {
  auto kind = parse_square_kind(kind_text);
  if (!kind) throw UsageError("unknown square kind '" + kind_text + "'");
  if (bound < 1) throw UsageError("--bound must be positive");
  if (*kind == SquareKind::K4 ? bound > 64 : bound > 1000000000L) throw UsageError("--bound too large for " + kind_text);
  const auto hits = square_sequence(*kind, bound, g.threads);
  std::ostringstream os;
  write_squares_csv(os, hits);
  if (g.json)
    std::cout << squares_json(*kind, bound, hits).dump(2) << "\n";
  else
    std::cout << os.str();
  // The plain output is already CSV on stdout.
  if (!g.csv.empty() && (g.json || g.csv != "-")) write_file(g.csv, os.str());
  return kExitOk;
}

int cmd_families(const Globals& g) {
  if (g.json) {
    json list = json::array();
    for (const auto& t : theorem_catalog()) {
      json suite = json::array();
      for (const auto& f : t.desk_suite) suite.push_back(param_text(f));
      list.push_back({{"id", t.id}, {"params", t.param_names}, {"summary", t.summary}, {"desk_suite", suite}});
    }
    std::cout << list.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "theorems (verify <id>):\n";
  for (const auto& t : theorem_catalog()) {
    std::string params;
    for (const auto& p : t.param_names) params += (params.empty() ? "" : " ") + ("--" + p);
    std::cout << "  " << t.id << std::string(t.id.size() < 14 ? 14 - t.id.size() : 1, ' ') << params
              << std::string(params.size() < 12 ? 12 - params.size() : 1, ' ') << t.summary << "\n";
  }
  std::cout << "suites (verify <name>): all, com, toroidal, stated, Table1, pq-sweep\n";
  std::cout << "sweep families:\n";
  for (const auto& [key, f] : sweep_families()) {
    std::string params;
    for (const auto& p : f.params) params += (params.empty() ? "" : " ") + ("--" + p);
    std::cout << "  " << key << std::string(key.size() < 6 ? 6 - key.size() : 1, ' ') << params
              << std::string(params.size() < 12 ? 12 - params.size() : 1, ' ') << f.help << "\n";
  }
  return kExitOk;
}

const char* kSpecHelp =
    "Group specs: D:2m=12 | D:m=6 | QD:2^4 | M:r=5,s=2 | Q:4n=16 | U:6n=18 | SD:8n=24 | V:8n=16 |\n"
    "  F:p=7,q=3 | HV:n=2 | HP:n=1,p=3 | S4 | A5 | S:k=5 | A:k=6 | SL23 | Sz2 | Z:4 | M16 |\n"
    "  D8*Z4 | SG16_3 | prod(X,Y)\n"
    "Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 computation error.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commuting graph spectra and energies of finite groups"};
  app.footer(kSpecHelp);
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print JSON instead of text");
  app.add_option("--csv", g.csv, "also write CSV to this path ('-' for stdout)");
  app.add_option("--tol", g.tol, "comparison tolerance for numeric paths")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));

  std::vector<std::string> specs;
  std::string emit_graph;
  auto* analyze = app.add_subcommand("analyze", "spectra, energies and flags of groups");
  analyze->add_option("spec", specs, "group spec")->required();
  analyze->add_option("--emit-graph", emit_graph, "write the graph as an edge list, or JSON for *.json ('-' for stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms and published claims against brute force");
  verify->add_option("selector", va.selector, "theorem id, or all, com, toroidal, stated, Table1, pq-sweep")->required();
  add_range_options(verify, va.ranges);
  verify->add_option("--kind", va.kind, "square kind for Table1 (K1, K2, K3, K4)");
  verify->add_option("--bound", va.bound, "scan bound for Table1");
  verify->add_option("--max-pq", va.max_pq, "largest pq in the Frobenius sweep");
  verify->add_flag("--small", va.small, "desk-scale bounds for 'all'");
  verify->add_flag("--strict", va.strict, "treat discrepancies as failures");
  verify->add_flag("--verbose,-v", va.verbose, "list passing checks too");

  std::string family;
  Ranges sweep_ranges;
  bool brute = false;
  auto* sweep = app.add_subcommand("sweep", "CSV of energies over a parameter range");
  sweep->add_option("family", family, "D, QD, M, Q, U, SD, V, F, HV, HP, D2m, ZpZp, Sz")->required();
  add_range_options(sweep, sweep_ranges);
  sweep->add_flag("--brute", brute, "build each witness group instead of the closed-form shape");

  std::string kind;
  long bound = 0;
  auto* squares = app.add_subcommand("squares", "parameters making a discriminant a perfect square");
  squares->add_option("--kind", kind, "K1, K2, K3 or K4")->required();
  squares->add_option("--bound", bound, "largest n (exponent for K4)")->required();

  auto* families = app.add_subcommand("families", "list theorems, suites and sweep families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(g, specs, emit_graph);
    if (*verify) return cmd_verify(g, va);
    if (*sweep) return cmd_sweep(g, family, sweep_ranges, brute);
    if (*squares) return cmd_squares(g, kind, bound);
    if (*families) return cmd_families(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterOutOfTheoremRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAFrobeniusPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AbelianGroup& e) {
    std::cerr << "error: AbelianGroup: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
