#include "ncg/rational.hpp"

#include <cctype>

namespace ncg {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

static bool valid_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::optional<Rational> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  BigInt n(num), d(den);
  if (d == 0) return std::nullopt;
  return make_rational(n, d);
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

int sign(const BigInt& v) { return sgn(v); }

int sign(const Rational& v) { return sgn(v); }

double to_double(const Rational& v) { return v.get_d(); }

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace ncg
