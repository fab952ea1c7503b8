#include "printers.hpp"

#include <algorithm>

#include "ncg/gf.hpp"
#include "ncg/groups.hpp"
#include "ncg/ncgraph.hpp"

using namespace ncg;

namespace {

long vertices(const GroupTable& g) { return g.order() - center(g).size; }

std::vector<long> degree_sequence(const GroupTable& g) {
  const NCGraph graph = noncommuting_graph(g);
  std::vector<long> d;
  for (long v = 0; v < graph.n(); ++v) d.push_back(graph.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("family orders, centers and vertex counts") {
  const GroupTable d6 = build_group(GroupSpec::dihedral(3));
  CHECK(d6.order() == 6);
  CHECK(center(d6).size == 1);
  CHECK(vertices(d6) == 5);
  CHECK(vertices(build_group(GroupSpec::dicyclic(2))) == 6);
  const GroupTable sz2 = build_group(GroupSpec::frobenius(5, 4));
  CHECK(sz2.order() == 20);
  CHECK(vertices(sz2) == 19);
  const GroupTable z4 = build_group(GroupSpec::cyclic(4));
  CHECK(center(z4).size == 4);
  CHECK(center(build_group(GroupSpec::dihedral(4))).size == 2);
  CHECK(center(build_group(GroupSpec::sl2_3())).size == 2);
}

TEST_CASE("every built table is a group of the expected order") {
  const std::vector<std::string> specs = {"D:2m=12", "QD:2^5",  "M:r=5,s=2", "Q:4n=20", "U:6n=18", "SD:8n=24",
                                          "V:8n=24", "F:p=7,q=3", "HV:n=2",  "HP:n=1,p=3", "S4",    "A5",
                                          "SL23",    "Sz2",     "M16",     "D8*Z4",   "SG16_3",  "prod(A4,Z:2)"};
  for (const auto& s : specs) {
    CAPTURE(s);
    const GroupSpec spec = parse_group_spec(s);
    const GroupTable g = build_group(spec);
    CHECK(g.order() == spec.expected_order());
    CHECK(g.is_latin_square());
    CHECK(g.is_associative());
    for (long x = 0; x < g.order(); ++x) CHECK(g.mul(x, g.inv(x)) == g.identity());
  }
}

TEST_CASE("center membership matches the commutation test") {
  const GroupTable g = build_group(parse_group_spec("SD:8n=16"));
  const CenterInfo z = center(g);
  for (long x = 0; x < g.order(); ++x) {
    bool central = true;
    for (long y = 0; y < g.order(); ++y) central = central && g.commute(x, y);
    CHECK(central == (std::find(z.elements.begin(), z.elements.end(), x) != z.elements.end()));
  }
}

TEST_CASE("direct products") {
  const GroupTable a = build_group(GroupSpec::dihedral(3));
  const GroupTable p = direct_product(a, build_group(GroupSpec::cyclic(3)));
  CHECK(p.order() == 18);
  CHECK(vertices(p) == 15);
  const GroupTable q = direct_product(build_permutation_matrix_groups(NamedGroup::A4), build_group(GroupSpec::cyclic(2)));
  CHECK(q.order() == 24);
  CHECK(vertices(q) == 22);
  const GroupTable one = direct_product(a, build_group(GroupSpec::cyclic(1)));
  CHECK(degree_sequence(one) == degree_sequence(a));
}

TEST_CASE("named groups have the known edge counts") {
  struct Row {
    NamedGroup which;
    long order, n, m;
  };
  for (const Row& r : {Row{NamedGroup::A4, 12, 11, 48}, Row{NamedGroup::S4, 24, 23, 228},
                       Row{NamedGroup::A5, 60, 59, 1650}, Row{NamedGroup::SL2_3, 24, 22, 0}}) {
    const GroupTable g = build_permutation_matrix_groups(r.which);
    CHECK(g.order() == r.order);
    const NCGraph graph = noncommuting_graph(g);
    CHECK(graph.n() == r.n);
    if (r.m) CHECK(graph.edge_count == r.m);
  }
}

TEST_CASE("spec grammar") {
  CHECK(parse_group_spec("D:2m=12").str() == "D:2m=12");
  CHECK(parse_group_spec("D:m=6").str() == "D:2m=12");
  CHECK(parse_group_spec("prod(A4,Z:2)").expected_order() == 24);
  CHECK(parse_group_spec("Sz2").expected_order() == 20);
  CHECK_THROWS_AS(parse_group_spec("D:2m=7"), SpecParseError);
  CHECK_THROWS_AS(parse_group_spec("nonsense"), SpecParseError);
  CHECK_THROWS_AS(build_group(GroupSpec::frobenius(7, 4)), NotAFrobeniusPair);
  CHECK_THROWS(build_group(GroupSpec::dihedral(20000)));
}

TEST_CASE("number helpers") {
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(least_primitive_root(7) == 3);
  CHECK(pow_mod(3, 6, 7) == 1);
}

TEST_CASE("GF(4) arithmetic") {
  const FieldSpec f = make_field(2, 2);
  CHECK(f.modulus == std::vector<long>{1, 1, 1});
  CHECK(f.size() == 4);
  const FieldElem t = ff_from_index(f, 2);
  const FieldElem t1 = ff_from_index(f, 3);
  CHECK(ff_add(f, t, t) == ff_zero(f));
  CHECK(ff_add(f, t, t1) == ff_one(f));
  CHECK(ff_mul(f, t, t) == t1);
  CHECK(ff_mul(f, t, t1) == ff_one(f));
  CHECK(frobenius(f, t) == t1);
  CHECK(frobenius(f, ff_zero(f)) == ff_zero(f));
  CHECK(frobenius(f, ff_one(f)) == ff_one(f));
}

TEST_CASE("finite field axioms against index arithmetic") {
  for (auto [p, n] : {std::pair{2L, 3L}, std::pair{3L, 2L}, std::pair{5L, 1L}}) {
    const FieldSpec f = make_field(p, n);
    CHECK(is_irreducible(p, f.modulus));
    for (long i = 0; i < f.size(); ++i) {
      const FieldElem x = ff_from_index(f, i);
      CHECK(ff_index(f, x) == i);
      CHECK(ff_mul(f, ff_one(f), x) == x);
      CHECK(ff_add(f, ff_zero(f), x) == x);
      if (i == 0) continue;
      long inverses = 0;
      for (long j = 1; j < f.size(); ++j) inverses += ff_mul(f, x, ff_from_index(f, j)) == ff_one(f);
      CHECK(inverses == 1);
    }
  }
  CHECK(make_field(2, 3).modulus == std::vector<long>{1, 1, 0, 1});
}

TEST_CASE("Hanaki groups") {
  const GroupTable v2 = build_hanaki(HanakiSpec::anv(2));
  CHECK(v2.order() == 16);
  CHECK(vertices(v2) == 12);
  const GroupTable p3 = build_hanaki(HanakiSpec::anp(1, 3));
  CHECK(p3.order() == 27);
  CHECK(vertices(p3) == 24);
  const GroupTable p2 = build_hanaki(HanakiSpec::anp(1, 2));
  const GroupTable d8 = build_group(GroupSpec::dihedral(4));
  CHECK(center(p2).size == center(d8).size);
  CHECK(degree_sequence(p2) == degree_sequence(d8));
}
