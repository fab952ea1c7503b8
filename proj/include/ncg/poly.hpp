#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

// Dense univariate polynomial with exact rational coefficients, low to high.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly x_minus(const Rational& root);  // x - root
  static RationalPoly from_ints(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_integral() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;
  // In-place multiplication by (x - root)^k.
  void mul_linear(const Rational& root, long k = 1);

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly scaled(const Rational& s) const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws on division by zero polynomial.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
// Square-free decomposition: returns (factor, multiplicity) with monic,
// pairwise coprime, square-free factors of positive degree.
std::vector<std::pair<RationalPoly, long>> squarefree_decomposition(const RationalPoly& f);

// Exact characteristic polynomial det(xI - M) of an integer matrix given
// row-major, via reduction to Hessenberg form over the rationals.
RationalPoly charpoly_exact(const std::vector<long>& m, int n);

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
BigInt determinant_bareiss(std::vector<BigInt> m, int n);

}  // namespace ncg
