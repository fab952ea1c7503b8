#include "printers.hpp"

#include <cmath>

#include "ncg/analysis.hpp"
#include "ncg/energies.hpp"
#include "ncg/groups.hpp"

using namespace ncg;

namespace {

Analysis analyze(const std::string& spec) { return analyze_group(parse_group_spec(spec)); }

SurdExpr rat(long a, long b = 1) { return SurdExpr(make_rational(a, b)); }
SurdExpr root(long d, long c = 1) { return SurdExpr::sqrt_of(BigInt(d), make_rational(c)); }

ExactSpectrum complete_q(long n) {  // K_n: {2n-2, (n-2)^(n-1)}
  ExactSpectrum s;
  s.add(SurdValue::integer(2 * n - 2), 1);
  s.add(SurdValue::integer(n - 2), n - 1);
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("D6 energies") {
  const Analysis a = analyze("D:2m=6");
  CHECK(*a.energies.E.exact == rat(2) + root(7, 2));
  CHECK(*a.energies.LE.exact == rat(42, 5));
  CHECK(*a.energies.LEplus.exact == rat(9, 5) + root(33));
  CHECK(a.energies.E.value == doctest::Approx(7.2915).epsilon(1e-4));
  const EnergyFlags want{false, false, true, false};
  CHECK(a.energies.flags == want);
  CHECK(a.checks_pass());
}

TEST_CASE("published energies of small groups") {
  CHECK(*analyze("A4").energies.LE.exact == rat(224, 11));
  CHECK(*analyze("QD:2^4").energies.LEplus.exact == rat(134, 7) + root(73, 2));
  CHECK(*analyze("SL23").energies.LEplus.exact == rat(282, 11) + root(420));
  const Analysis sz = analyze("Sz2");
  CHECK(*sz.energies.E.exact == rat(12) + root(6, 8));
  CHECK(*sz.energies.LE.exact == rat(690, 19));
}

TEST_CASE("complete graph energies") {
  for (long n : {2L, 5L, 9L}) {
    const ExactSpectrum q = complete_q(n);
    const long m = n * (n - 1) / 2;
    CHECK(signless_laplacian_energy(q, n, m) == rat(2 * (n - 1)));
    ExactSpectrum l;
    l.add(SurdValue::integer(0), 1);
    l.add(SurdValue::integer(n), n - 1);
    l.canonicalize();
    CHECK(laplacian_energy(l, n, m) == rat(2 * (n - 1)));
    ExactSpectrum a;
    a.add(SurdValue::integer(n - 1), 1);
    a.add(SurdValue::integer(-1), n - 1);
    a.canonicalize();
    CHECK(graph_energy(a) == rat(2 * (n - 1)));
    EnergyReport r = energy_report(n, m, a, l, q, std::nullopt, std::nullopt, std::nullopt);
    CHECK(r.flags == EnergyFlags{});
    CHECK(r.ordering.all_equal());
    CHECK(r.ordering.exact());
  }
}

TEST_CASE("numeric energies agree with exact ones") {
  const Analysis a = analyze("F:p=7,q=3");
  REQUIRE(a.q_num);
  REQUIRE(a.q_exact);
  const long n = a.energies.n_vertices, m = a.energies.n_edges;
  CHECK(signless_laplacian_energy(*a.q_num, n, m) ==
        doctest::Approx(signless_laplacian_energy(*a.q_exact, n, m).to_double()).epsilon(1e-10));
  CHECK(laplacian_energy(*a.l_num, n, m) == doctest::Approx(laplacian_energy(*a.l_exact, n, m).to_double()).epsilon(1e-10));
  CHECK(graph_energy(*a.a_num) == doctest::Approx(graph_energy(*a.a_exact).to_double()).epsilon(1e-10));
}

TEST_CASE("S4 is hyperenergetic") {
  const Analysis a = analyze("S4");
  CHECK(a.energies.flags.hyperenergetic);
  CHECK_FALSE(a.shape.has_value());
}

TEST_CASE("equality and strict orderings") {
  for (const char* s : {"D:2m=8", "Q:4n=8"}) {
    CAPTURE(s);
    const Analysis a = analyze(s);
    CHECK(a.energies.ordering.all_equal());
    CHECK(a.energies.ordering.exact());
    CHECK(*a.energies.E.exact == rat(8));
  }
  const Analysis d10 = analyze("D:2m=10");
  CHECK(d10.energies.ordering.strict_increasing());
  CHECK(d10.energies.ordering.exact());
  CHECK(d10.energies.ordering.str() == "E < LE+ < LE");
}

TEST_CASE("comparisons fall back to tolerance for numeric values") {
  const EnergyValue x{1.0, std::nullopt};
  const EnergyValue y{1.0 + 1e-12, std::nullopt};
  const Comparison c = compare_energies(x, y, 1e-9);
  CHECK(c.rel == Relation::Equal);
  CHECK_FALSE(c.exact);
  const EnergyValue p{std::sqrt(2.0), root(2)};
  const EnergyValue q{1.5, rat(3, 2)};
  CHECK(compare_energies(p, q, 1e-9).rel == Relation::Less);
  CHECK(compare_energies(p, q, 1e-9).exact);
  CHECK(std::string(relation_symbol(Relation::Less)) == "<");
}

TEST_CASE("trace identities on every analysis") {
  for (const char* s : {"D:2m=14", "S4", "A5", "HP:n=1,p=3", "SG16_3", "prod(D:2m=6,Z:3)"}) {
    CAPTURE(s);
    const Analysis a = analyze(s);
    CHECK(a.checks_pass());
    const long two_m = 2 * a.energies.n_edges;
    if (a.q_exact) CHECK(a.q_exact->sum() == rat(two_m));
    if (a.l_exact) CHECK(a.l_exact->sum() == rat(two_m));
    if (a.a_exact) CHECK(a.a_exact->sum().is_zero());
    if (a.q_num) {
      double sq = 0, sl = 0, sa = 0;
      for (double v : a.q_num->values) sq += v;
      for (double v : a.l_num->values) sl += v;
      for (double v : a.a_num->values) sa += v;
      const double n = static_cast<double>(a.energies.n_vertices);
      CHECK(std::abs(sq - two_m) < 1e-6 * n);
      CHECK(std::abs(sl - two_m) < 1e-6 * n);
      CHECK(std::abs(sa) < 1e-6 * n);
    }
  }
}
