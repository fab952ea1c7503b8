#include "printers.hpp"

#include <algorithm>

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ncg/analysis.hpp"
#include "ncg/groups.hpp"
#include "ncg/integrality.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/spectra.hpp"

using namespace ncg;
using nlohmann::json;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

RationalPoly poly(const json& coeffs) {
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.emplace_back(BigInt(v.get<std::string>()));
  return RationalPoly(std::move(c));
}

void check_close(const std::vector<double>& got, const json& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i].get<double>()) < tol);
}

}  // namespace

TEST_CASE("groups agree with the independent constructions") {
  for (const json& rec : load("groups.json")) {
    const std::string spec = rec["spec"];
    CAPTURE(spec);
    const GroupTable g = build_group(parse_group_spec(spec));
    CHECK(g.order() == rec["order"].get<long>());
    CHECK(center(g).size == rec["center"].get<long>());
    const NCGraph graph = noncommuting_graph(g);
    CHECK(graph.n() == rec["n"].get<long>());
    CHECK(graph.edge_count == rec["m"].get<long>());
    std::vector<long> deg;
    for (long v = 0; v < graph.n(); ++v) deg.push_back(graph.degree(v));
    std::sort(deg.begin(), deg.end());
    CHECK(deg == rec["degrees"].get<std::vector<long>>());
    const auto cliques = complement_clique_decomposition(graph);
    if (rec["cliques"].is_null()) {
      CHECK_FALSE(cliques.has_value());
    } else {
      REQUIRE(cliques);
      auto sorted = *cliques;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == rec["cliques"].get<std::vector<long>>());
    }

    AnalyzeOptions opts;
    opts.numeric_cap = 100000;
    const Analysis a = analyze_graph(graph, opts);
    REQUIRE(a.q_num);
    check_close(a.a_num->values, rec["a_eigs"], 1e-8);
    check_close(a.l_num->values, rec["l_eigs"], 1e-8);
    check_close(a.q_num->values, rec["q_eigs"], 1e-8);
    CHECK(a.energies.E.value == doctest::Approx(rec["E"].get<double>()).epsilon(1e-10));
    CHECK(a.energies.LE.value == doctest::Approx(rec["LE"].get<double>()).epsilon(1e-10));
    CHECK(a.energies.LEplus.value == doctest::Approx(rec["LEplus"].get<double>()).epsilon(1e-10));

    if (rec.contains("q_charpoly")) {
      CHECK(charpoly_exact(integer_matrix_of(graph, MatrixKind::Adjacency), static_cast<int>(graph.n())) ==
            poly(rec["a_charpoly"]));
      CHECK(charpoly_exact(integer_matrix_of(graph, MatrixKind::SignlessLaplacian), static_cast<int>(graph.n())) ==
            poly(rec["q_charpoly"]));
      CHECK(a.q_integral == rec["q_integral"].get<bool>());
    }
  }
}

TEST_CASE("multipartite polynomials agree with sympy determinants") {
  for (const json& rec : load("multipartite.json")) {
    const std::vector<long> parts = rec["parts"];
    const MultipartiteShape s = shape_from_cliques(parts);
    CAPTURE(s.str());
    CHECK(a_charpoly_multipartite(s) == poly(rec["a_charpoly"]));
    CHECK(q_polynomial_multipartite(s) == poly(rec["q_charpoly"]));
    const NCGraph g = complete_multipartite(s);
    CHECK(charpoly_exact(integer_matrix_of(g, MatrixKind::Laplacian), static_cast<int>(g.n())) == poly(rec["l_charpoly"]));
  }
}

TEST_CASE("square sequences agree with an isqrt scan") {
  const json sq = load("squares.json");
  for (const auto& [name, rec] : sq.items()) {
    CAPTURE(name);
    const auto hits = square_sequence(*parse_square_kind(name), rec["bound"].get<long>());
    REQUIRE(hits.size() == rec["hits"].size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
      CHECK(hits[i].n == rec["hits"][i][0].get<long>());
      CHECK(to_string(hits[i].root) == rec["hits"][i][1].get<std::string>());
    }
  }
}
