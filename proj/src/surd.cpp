#include "ncg/surd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ncg {

namespace {

constexpr unsigned long kTrialCap = 4'000'000;

std::string sqrt_term(const Rational& c, const BigInt& r) {
  std::string root = "sqrt(" + r.get_str() + ")";
  BigInt num = abs(c.get_num());
  const BigInt& den = c.get_den();
  std::string s = num == 1 ? root : num.get_str() + "*" + root;
  if (den != 1) s += "/" + den.get_str();
  return s;
}

}  // namespace

SquareSplit split_square(const BigInt& d) {
  if (d < 0) throw std::invalid_argument("split_square: negative radicand");
  if (d < 2) return {BigInt(1), d};
  BigInt rem = d, root = 1, free = 1;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) free *= p;
  };
  BigInt limit;
  auto relimit = [&] { mpz_root(limit.get_mpz_t(), rem.get_mpz_t(), 3); };
  strip(2);
  relimit();
  for (unsigned long p = 3; p < kTrialCap && limit >= p; p += 2) {
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    strip(p);
    relimit();
  }
  // rem now has at most two prime factors (when the loop ran to completion).
  if (rem > 1) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), rem.get_mpz_t());
      root *= s;
    } else {
      free *= rem;
    }
  }
  return {root, free};
}

SurdValue::SurdValue(const Rational& a) : a_(a) {}

SurdValue SurdValue::make(const Rational& a, const Rational& b, const BigInt& d) {
  SurdValue v;
  v.a_ = a;
  if (b == 0 || d == 0) return v;
  if (d < 0) throw std::invalid_argument("SurdValue: negative radicand");
  SquareSplit sp = split_square(d);
  Rational coeff = b * sp.root;
  if (sp.free == 1) {
    v.a_ += coeff;
    return v;
  }
  v.b_ = coeff;
  v.d_ = sp.free;
  return v;
}

double SurdValue::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string SurdValue::str() const { return SurdExpr(*this).str(); }

SurdExpr::SurdExpr(const Rational& q) { add_term(BigInt(1), q); }

SurdExpr::SurdExpr(const SurdValue& v) {
  add_term(BigInt(1), v.a());
  if (!v.is_rational()) add_term(v.d(), v.b());
}

SurdExpr SurdExpr::sqrt_of(const BigInt& d, const Rational& c) {
  SurdExpr e;
  if (d == 0 || c == 0) return e;
  SquareSplit sp = split_square(d);
  e.add_term(sp.free, c * sp.root);
  return e;
}

void SurdExpr::add_term(const BigInt& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

bool SurdExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdExpr::rational_part() const {
  auto it = terms_.find(BigInt(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

SurdExpr SurdExpr::operator-() const {
  SurdExpr r = *this;
  for (auto& [rad, c] : r.terms_) c = -c;
  return r;
}

SurdExpr& SurdExpr::operator+=(const SurdExpr& o) {
  for (const auto& [rad, c] : o.terms_) add_term(rad, c);
  return *this;
}

SurdExpr& SurdExpr::operator-=(const SurdExpr& o) {
  for (const auto& [rad, c] : o.terms_) add_term(rad, -c);
  return *this;
}

SurdExpr& SurdExpr::operator*=(const SurdExpr& o) {
  SurdExpr out;
  for (const auto& [r1, c1] : terms_) {
    for (const auto& [r2, c2] : o.terms_) {
      BigInt g = gcd(r1, r2);
      BigInt rad = (r1 / g) * (r2 / g);
      out.add_term(rad, c1 * c2 * g);
    }
  }
  *this = std::move(out);
  return *this;
}

double SurdExpr::to_double() const {
  double s = 0.0;
  for (const auto& [rad, c] : terms_) s += c.get_d() * std::sqrt(rad.get_d());
  return s;
}

std::string SurdExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [rad, c] : terms_) {
    bool first = out.empty();
    if (rad == 1) {
      out += first ? to_string(c) : (c < 0 ? " - " + to_string(Rational(-c)) : " + " + to_string(c));
      continue;
    }
    if (first)
      out += (c < 0 ? "-" : "") + sqrt_term(c, rad);
    else
      out += (c < 0 ? " - " : " + ") + sqrt_term(c, rad);
  }
  return out;
}

namespace {

std::vector<BigInt> coprime_base(std::vector<BigInt> xs) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
        BigInt g = gcd(xs[i], xs[j]);
        if (g == 1) continue;
        BigInt a = xs[i] / g, b = xs[j] / g;
        xs.erase(xs.begin() + static_cast<long>(j));
        xs.erase(xs.begin() + static_cast<long>(i));
        for (const BigInt& v : {g, a, b})
          if (v > 1) xs.push_back(v);
        changed = true;
      }
    }
  }
  return xs;
}

int sign_rec(const SurdExpr& e) {
  if (e.is_zero()) return 0;
  if (e.is_rational()) return sgn(e.rational_part());
  std::vector<BigInt> rads;
  for (const auto& [rad, c] : e.terms())
    if (rad != 1) rads.push_back(rad);
  std::vector<BigInt> base = coprime_base(rads);
  const BigInt b = *std::max_element(base.begin(), base.end());
  SurdExpr A, B;
  for (const auto& [rad, c] : e.terms()) {
    if (mpz_divisible_p(rad.get_mpz_t(), b.get_mpz_t()))
      B += SurdExpr::sqrt_of(rad / b, c);
    else
      A += SurdExpr::sqrt_of(rad, c);
  }
  int sa = sign_rec(A), sb = sign_rec(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  SurdExpr diff = A * A - B * B * SurdExpr(Rational(b));
  return sa * sign_rec(diff);
}

}  // namespace

int SurdExpr::sign() const { return sign_rec(*this); }

int compare(const SurdExpr& x, const SurdExpr& y) { return (x - y).sign(); }

int compare(const SurdValue& x, const SurdValue& y) {
  return (SurdExpr(x) - SurdExpr(y)).sign();
}

}  // namespace ncg
