#include "printers.hpp"

#include "ncg/poly.hpp"
#include "ncg/rational.hpp"
#include "ncg/surd.hpp"

using namespace ncg;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(make_rational(292, 20)) == "73/5");
  CHECK(to_string(make_rational(-6, 3)) == "-2");
  CHECK(*parse_rational("-7/21") == make_rational(-1, 3));
  CHECK(*parse_rational("42") == make_rational(42));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("x").has_value());
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_FALSE(is_integer(make_rational(9, 5)));
}

TEST_CASE("surd values normalize their radicand") {
  const SurdValue v = SurdValue::make(make_rational(27), make_rational(1, 2), BigInt(420));
  CHECK(v.d() == 105);
  CHECK(v.b() == 1);
  CHECK(SurdValue::make(make_rational(5), make_rational(1), BigInt(9)) == SurdValue(make_rational(8)));
  CHECK(SurdValue::make(make_rational(5), make_rational(0), BigInt(7)).is_rational());
  CHECK(v.conjugate().b() == -1);
}

TEST_CASE("surd expressions add, multiply and compare exactly") {
  const SurdExpr a = SurdExpr(make_rational(2)) + SurdExpr::sqrt_of(BigInt(28));  // 2 + 2 sqrt 7
  CHECK(a == SurdExpr(make_rational(2)) + SurdExpr::sqrt_of(BigInt(7), make_rational(2)));
  CHECK(a.str() == "2 + 2*sqrt(7)");
  const SurdExpr r7 = SurdExpr::sqrt_of(BigInt(7));
  CHECK((r7 * r7) == SurdExpr(make_rational(7)));
  CHECK((SurdExpr::sqrt_of(BigInt(2)) * SurdExpr::sqrt_of(BigInt(3))) == SurdExpr::sqrt_of(BigInt(6)));
  // sqrt(2) + sqrt(3) vs sqrt(10): 3.146 > 3.162 is false
  CHECK(compare(SurdExpr::sqrt_of(BigInt(2)) + SurdExpr::sqrt_of(BigInt(3)), SurdExpr::sqrt_of(BigInt(10))) < 0);
  // 85/11 + sqrt(145) just below 20
  CHECK(compare(SurdExpr(make_rational(85, 11)) + SurdExpr::sqrt_of(BigInt(145)), SurdExpr(make_rational(20))) < 0);
  CHECK((a - a).is_zero());
  CHECK((-a).sign() == -1);
}

TEST_CASE("split_square") {
  const SquareSplit s = split_square(BigInt(420));
  CHECK(s.root == 2);
  CHECK(s.free == 105);
  CHECK(split_square(BigInt(0)).free == 0);
}

TEST_CASE("polynomial arithmetic") {
  RationalPoly p = RationalPoly::constant(make_rational(1));
  p.mul_linear(make_rational(3), 3);
  CHECK(p.degree() == 3);
  CHECK(p.eval(make_rational(3)) == 0);
  const auto [q, r] = divmod(p, RationalPoly::x_minus(make_rational(3)));
  CHECK(r.is_zero());
  CHECK(q.degree() == 2);
  CHECK(gcd(p, p.derivative()).degree() == 2);
  const auto sqf = squarefree_decomposition(p);
  REQUIRE(sqf.size() == 1);
  CHECK(sqf[0].second == 3);
}

TEST_CASE("charpoly_exact matches known small cases") {
  // Path P3 signless Laplacian: det(xI - Q) = x(x-1)(x-3)
  const std::vector<long> q = {1, 1, 0, 1, 2, 1, 0, 1, 1};
  CHECK(charpoly_exact(q, 3) == RationalPoly::from_ints({0, 3, -4, 1}));
  const std::vector<BigInt> m = {2, 1, 1, 3};
  CHECK(determinant_bareiss(m, 2) == 5);
}
