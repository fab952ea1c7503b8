#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ncg {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den", or just "num" for integers.
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Accepts "a", "-a", "a/b".
std::optional<Rational> parse_rational(const std::string& s);

bool is_integer(const Rational& v);
int sign(const BigInt& v);
int sign(const Rational& v);
double to_double(const Rational& v);

BigInt pow(const BigInt& base, unsigned long e);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace ncg
