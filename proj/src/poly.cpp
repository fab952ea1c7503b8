#include "ncg/poly.hpp"

#include <stdexcept>

namespace ncg {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::x_minus(const Rational& root) {
  return RationalPoly({Rational(-root), Rational(1)});
}

RationalPoly RationalPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

bool RationalPoly::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (c_.empty()) return {};
  return scaled(Rational(1) / c_.back());
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
  std::vector<Rational> out = c_;
  for (auto& v : out) v *= s;
  return RationalPoly(std::move(out));
}

void RationalPoly::mul_linear(const Rational& root, long k) {
  if (c_.empty()) return;
  for (long t = 0; t < k; ++t) {
    c_.emplace_back(0);
    for (std::size_t i = c_.size() - 1; i > 0; --i) c_[i] = c_[i - 1] - root * c_[i];
    c_[0] = -root * c_[0];
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(out));
}

std::string RationalPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    bool neg = v < 0;
    Rational mag = neg ? Rational(-v) : v;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = mag == 1;
    if (!unit || i == 0) s += to_string(mag);
    if (i > 0) {
      if (!unit) s += "*";
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational inv_lead = Rational(1) / b.leading();
  for (int i = a.degree() - db; i >= 0; --i) {
    Rational q = rem[static_cast<std::size_t>(i + db)] * inv_lead;
    quo[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<RationalPoly, long>> squarefree_decomposition(const RationalPoly& f) {
  std::vector<std::pair<RationalPoly, long>> out;
  if (f.degree() < 1) return out;
  RationalPoly fm = f.monic();
  RationalPoly fp = fm.derivative();
  RationalPoly a = gcd(fm, fp);
  RationalPoly b = divmod(fm, a).first;
  RationalPoly c = divmod(fp, a).first;
  RationalPoly d = c - b.derivative();
  long i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

RationalPoly charpoly_exact(const std::vector<long>& m, int n) {
  if (n == 0) return RationalPoly::constant(Rational(1));
  const auto N = static_cast<std::size_t>(n);
  std::vector<Rational> h(N * N);
  for (std::size_t i = 0; i < N * N; ++i) h[i] = m[i];
  auto H = [&](std::size_t i, std::size_t j) -> Rational& { return h[i * N + j]; };
  // Hessenberg reduction by elementary similarity transforms.
  for (std::size_t col = 0; col + 2 < N; ++col) {
    std::size_t piv = col + 1;
    while (piv < N && H(piv, col) == 0) ++piv;
    if (piv == N) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < N; ++j) std::swap(H(piv, j), H(col + 1, j));
      for (std::size_t i = 0; i < N; ++i) std::swap(H(i, piv), H(i, col + 1));
    }
    Rational t = H(col + 1, col);
    for (std::size_t i = col + 2; i < N; ++i) {
      Rational u = H(i, col) / t;
      if (u == 0) continue;
      for (std::size_t j = 0; j < N; ++j) H(i, j) -= u * H(col + 1, j);
      for (std::size_t r = 0; r < N; ++r) H(r, col + 1) += u * H(r, i);
    }
  }
  std::vector<RationalPoly> p;
  p.reserve(N + 1);
  p.push_back(RationalPoly::constant(Rational(1)));
  for (std::size_t k = 1; k <= N; ++k) {
    RationalPoly next = p[k - 1];
    next.mul_linear(H(k - 1, k - 1));
    Rational t(1);
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= H(i, i - 1);
      if (t == 0) break;
      Rational coef = H(i - 1, k - 1) * t;
      if (coef != 0) next -= p[i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[N];
}

BigInt determinant_bareiss(std::vector<BigInt> m, int n) {
  if (n == 0) return BigInt(1);
  const auto N = static_cast<std::size_t>(n);
  auto A = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * N + j]; };
  BigInt prev = 1;
  int sgn_flip = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (A(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < N && A(r, k) == 0) ++r;
      if (r == N) return BigInt(0);
      for (std::size_t j = 0; j < N; ++j) std::swap(A(k, j), A(r, j));
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        BigInt v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = v;
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sgn_flip * A(N - 1, N - 1);
}

}  // namespace ncg
