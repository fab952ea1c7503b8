#include "printers.hpp"

#include "ncg/groups.hpp"
#include "ncg/ncgraph.hpp"

using namespace ncg;

namespace {

NCGraph graph_of(const std::string& spec) { return noncommuting_graph(build_group(parse_group_spec(spec))); }

}  // namespace

TEST_CASE("vertex and edge counts") {
  const NCGraph d6 = graph_of("D:2m=6");
  CHECK(d6.n() == 5);
  CHECK(d6.edge_count == 9);
  const NCGraph q8 = graph_of("Q:4n=8");
  CHECK(q8.n() == 6);
  CHECK(q8.edge_count == 12);
  const NCGraph u12 = graph_of("U:6n=12");
  CHECK(u12.n() == 10);
  CHECK(u12.edge_count == 36);
}

TEST_CASE("abelian groups have no graph") { CHECK_THROWS_AS(graph_of("Z:4"), AbelianGroup); }

TEST_CASE("adjacency is symmetric and loop-free") {
  const NCGraph g = graph_of("SL23");
  long twice = 0;
  for (long i = 0; i < g.n(); ++i) {
    CHECK_FALSE(g.adj.get(i, i));
    for (long j = 0; j < g.n(); ++j) CHECK(g.adj.get(i, j) == g.adj.get(j, i));
    twice += g.degree(i);
  }
  CHECK(twice == 2 * g.edge_count);
}

TEST_CASE("complement clique decomposition") {
  CHECK(*complement_clique_decomposition(graph_of("D:2m=6")) == std::vector<long>{1, 1, 1, 2});
  CHECK(*complement_clique_decomposition(graph_of("V:8n=16")) == std::vector<long>{4, 4, 4});
  const NCGraph p4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(complement_clique_decomposition(p4).has_value());
  CHECK_FALSE(multipartite_shape(p4).has_value());
}

TEST_CASE("multipartite shapes") {
  const auto d6 = multipartite_shape(graph_of("D:2m=6"));
  REQUIRE(d6);
  CHECK(d6->parts == std::vector<std::pair<long, long>>{{1, 3}, {2, 1}});
  CHECK(d6->str() == "K_{3.1,1.2}");
  const auto sz = multipartite_shape(graph_of("Sz2"));
  REQUIRE(sz);
  CHECK(sz->parts == std::vector<std::pair<long, long>>{{3, 5}, {4, 1}});
  const auto a5 = multipartite_shape(graph_of("A5"));
  REQUIRE(a5);
  CHECK(a5->parts == std::vector<std::pair<long, long>>{{2, 10}, {3, 5}, {4, 6}});
  CHECK(a5->n() == 59);
  CHECK(a5->r() == 21);
  CHECK_FALSE(multipartite_shape(graph_of("S4")).has_value());
}

TEST_CASE("complete multipartite construction round-trips") {
  const MultipartiteShape s = shape_from_cliques({1, 2, 2, 3, 3, 3});
  const NCGraph g = complete_multipartite(s);
  CHECK(g.n() == 14);
  CHECK(*multipartite_shape(g) == s);
  CHECK(g.edge_count == (14 * 14 - (1 + 4 + 4 + 9 + 9 + 9)) / 2);
}

TEST_CASE("edge list and json export") {
  const NCGraph g = graph_from_edges(3, {{0, 1}, {1, 2}});
  const std::string edges = to_edge_list(g);
  CHECK(edges.find("0 1") != std::string::npos);
  CHECK(edges.find("1 2") != std::string::npos);
  CHECK(to_graph_json(g).find("\"edges\"") != std::string::npos);
}
