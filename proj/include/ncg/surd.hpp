#pragma once

#include <map>
#include <string>

#include "ncg/rational.hpp"

namespace ncg {

// Splits d >= 0 as s^2 * f with f square-free. Exact for d below ~1e36;
// beyond that the residual cofactor is assumed square-free unless it is a
// perfect square.
struct SquareSplit {
  BigInt root;  // s
  BigInt free;  // f
};
SquareSplit split_square(const BigInt& d);

// a + b*sqrt(d); normalized so that d is square-free, d == 0 iff b == 0,
// and d == 1 never occurs (folded into a).
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(const Rational& a);  // NOLINT(google-explicit-constructor)
  static SurdValue make(const Rational& a, const Rational& b, const BigInt& d);
  static SurdValue integer(long v) { return SurdValue(make_rational(v)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  SurdValue conjugate() const { return make(a_, -b_, d_); }
  double to_double() const;
  std::string str() const;

  friend bool operator==(const SurdValue& x, const SurdValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const SurdValue& x, const SurdValue& y) { return !(x == y); }

 private:
  Rational a_{0};
  Rational b_{0};
  BigInt d_{0};
};

// Element of a multiquadratic field: sum of c_r * sqrt(r) over distinct
// square-free radicands r (r == 1 is the rational part).
class SurdExpr {
 public:
  SurdExpr() = default;
  SurdExpr(const Rational& q);  // NOLINT(google-explicit-constructor)
  SurdExpr(const SurdValue& v);  // NOLINT(google-explicit-constructor)
  static SurdExpr integer(long v) { return SurdExpr(make_rational(v)); }
  // c * sqrt(d) for any d >= 0.
  static SurdExpr sqrt_of(const BigInt& d, const Rational& c = Rational(1));

  const std::map<BigInt, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  // Exact sign via recursive splitting over a coprime base of radicands.
  int sign() const;
  SurdExpr abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;
  std::string str() const;

  SurdExpr operator-() const;
  SurdExpr& operator+=(const SurdExpr& o);
  SurdExpr& operator-=(const SurdExpr& o);
  SurdExpr& operator*=(const SurdExpr& o);
  friend SurdExpr operator+(SurdExpr x, const SurdExpr& y) { return x += y; }
  friend SurdExpr operator-(SurdExpr x, const SurdExpr& y) { return x -= y; }
  friend SurdExpr operator*(SurdExpr x, const SurdExpr& y) { return x *= y; }

  friend bool operator==(const SurdExpr& x, const SurdExpr& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const SurdExpr& x, const SurdExpr& y) { return !(x == y); }

 private:
  void add_term(const BigInt& radicand, const Rational& coeff);
  std::map<BigInt, Rational> terms_;
};

// -1, 0, 1 exactly.
int compare(const SurdExpr& x, const SurdExpr& y);
int compare(const SurdValue& x, const SurdValue& y);

}  // namespace ncg
