#include "printers.hpp"

#include <sstream>

#include "ncg/groups.hpp"
#include "ncg/report.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

TEST_CASE("catalog contents") {
  CHECK(theorem_catalog().size() == 17);
  for (const TheoremInfo& t : theorem_catalog()) {
    CAPTURE(t.id);
    CHECK(t.desk_suite.size() >= 3);
    CHECK(find_theorem(t.id) == &t);
  }
  CHECK(find_theorem("nope") == nullptr);
  CHECK(planar_commuting_groups().size() == 17);
  CHECK(toroidal_commuting_groups().size() == 7);
  CHECK(table1(SquareKind::K4).empty());
  for (const auto& g : planar_commuting_groups()) CHECK_NOTHROW(parse_group_spec(g.spec));
}

TEST_CASE("surd and spectrum json round trips") {
  const SurdExpr e = SurdExpr(make_rational(282, 11)) + SurdExpr::sqrt_of(BigInt(420));
  CHECK(surd_expr_from_json(surd_expr_json(e)) == e);
  ExactSpectrum s;
  s.add(SurdValue::make(make_rational(23, 2), make_rational(1, 2), BigInt(145)), 1);
  s.add(SurdValue::integer(9), 4);
  s.canonicalize();
  CHECK(spectrum_from_json(spectrum_json(s)) == s);
  CHECK_THROWS_AS(surd_expr_from_json(json::parse(R"([{"radicand": "x"}])")), ReportParseError);
}

TEST_CASE("analysis json round trip") {
  for (const char* spec : {"D:2m=6", "S4", "A5", "F:p=7,q=3"}) {
    CAPTURE(spec);
    const json j = analysis_json(analyze_group(parse_group_spec(spec)));
    CHECK(analysis_json(analysis_from_json(j)) == j);
    CHECK(j.dump() == json::parse(j.dump()).dump());
  }
}

TEST_CASE("verify outcomes") {
  const VerifyOutcome o = verify_formula(FamilyFormula::dihedral(5));
  CHECK(o.theorem == "Dihedral1");
  CHECK(o.overall() == Status::Pass);
  CHECK(outcome_json(outcome_from_json(outcome_json(o))) == outcome_json(o));
  const VerifyOutcome f = verify_formula(FamilyFormula::frobenius(7, 3));
  CHECK(f.overall() == Status::Discrepancy);
  const auto summary = summarize({o, f});
  CHECK(summary.pass == 1);
  CHECK(summary.discrepancy == 1);
  CHECK(verify_exit_code(summary, false) == 0);
  CHECK(verify_exit_code(summary, true) == 1);
  CHECK(verify_exit_code(VerifySummary{0, 1, 0, 0}, false) == 1);
  CHECK(verify_report_json({o, f}, true)["summary"]["exit_code"] == 1);
}

TEST_CASE("parallel verification keeps input order") {
  std::vector<FamilyFormula> fs;
  for (long m = 3; m <= 14; ++m) fs.push_back(FamilyFormula::dihedral(m));
  VerifyOptions opts;
  opts.threads = 4;
  const auto out = verify_formulas(fs, opts);
  REQUIRE(out.size() == fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(out[i].params == fs[i].str());
}

TEST_CASE("csv output") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  std::ostringstream os;
  write_squares_csv(os, square_sequence(SquareKind::K3, 1000));
  CHECK(os.str() == "n,root\n1,3\n18,99\n595,3363\n");
  std::ostringstream sw;
  const auto rows = sweep_formulas({FamilyFormula::dihedral(3), FamilyFormula::dihedral(5)}, false);
  std::vector<std::pair<std::string, Analysis>> named;
  for (const auto& [f, a] : rows) named.emplace_back(param_text(f), a);
  write_sweep_csv(sw, named);
  std::string header;
  std::istringstream in(sw.str());
  std::getline(in, header);
  CHECK(header == "param,n_vertices,n_edges,E,LEplus,LE,hypo,hyper,Lhyper,Qhyper,Qintegral");
  long lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 2);
}
