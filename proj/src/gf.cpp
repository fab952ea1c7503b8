#include "ncg/gf.hpp"

#include <string>

namespace ncg {

namespace {

// Remainder of a modulo the monic polynomial m over GF(p).
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
  const auto dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    long c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(dm);
  return a;
}

std::vector<long> digits(long v, long p, long len) {
  std::vector<long> out(static_cast<std::size_t>(len), 0);
  for (long i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = v % p;
    v /= p;
  }
  return out;
}

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

long FieldSpec::size() const { return ipow(p, n); }

bool is_irreducible(long p, const std::vector<long>& poly) {
  const long deg = static_cast<long>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (long d = 1; d <= deg / 2; ++d) {
    for (long code = 0; code < ipow(p, d); ++code) {
      std::vector<long> cand = digits(code, p, d);
      cand.push_back(1);
      std::vector<long> r = poly_mod(poly, cand, p);
      bool zero = true;
      for (long c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldSpec make_field(long p, long n) {
  if (!is_prime(p) || n < 1) throw ParameterOutOfRange("GF(p^n) needs prime p and n >= 1");
  if (ipow(p, n) > 65536) throw ParameterOutOfRange("GF(p^n) limited to p^n <= 2^16");
  for (long code = 0; code < ipow(p, n); ++code) {
    std::vector<long> cand = digits(code, p, n);
    cand.push_back(1);
    if (is_irreducible(p, cand)) return {p, n, cand};
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElem ff_zero(const FieldSpec& f) { return {std::vector<long>(static_cast<std::size_t>(f.n), 0)}; }

FieldElem ff_one(const FieldSpec& f) {
  FieldElem e = ff_zero(f);
  e.coeffs[0] = 1;
  return e;
}

FieldElem ff_from_index(const FieldSpec& f, long idx) { return {digits(idx, f.p, f.n)}; }

long ff_index(const FieldSpec& f, const FieldElem& x) {
  long v = 0;
  for (std::size_t i = x.coeffs.size(); i-- > 0;) v = v * f.p + x.coeffs[i];
  return v;
}

FieldElem ff_add(const FieldSpec& f, const FieldElem& x, const FieldElem& y) {
  FieldElem r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % f.p;
  return r;
}

FieldElem ff_mul(const FieldSpec& f, const FieldElem& x, const FieldElem& y) {
  std::vector<long> prod(static_cast<std::size_t>(2 * f.n - 1), 0);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs.size(); ++j)
      prod[i + j] = (prod[i + j] + x.coeffs[i] * y.coeffs[j]) % f.p;
  return {poly_mod(std::move(prod), f.modulus, f.p)};
}

FieldElem frobenius(const FieldSpec& f, const FieldElem& x) {
  if (f.p != 2) throw FrobeniusRequiresChar2("frobenius map x -> x^2 requires characteristic 2");
  return ff_mul(f, x, x);
}

GroupTable build_hanaki(const HanakiSpec& which) {
  if (which.char2) {
    if (which.n < 2) throw ParameterOutOfRange("A(n,V) requires n >= 2");
    if (ipow(2, 2 * which.n) > kOrderCap) throw OrderCapExceeded("A(n,V) order exceeds cap");
    FieldSpec f = make_field(2, which.n);
    const long q = f.size();
    std::vector<long> add(static_cast<std::size_t>(q * q)), mul(static_cast<std::size_t>(q * q));
    for (long i = 0; i < q; ++i)
      for (long j = 0; j < q; ++j) {
        FieldElem a = ff_from_index(f, i), b = ff_from_index(f, j);
        add[static_cast<std::size_t>(i * q + j)] = ff_index(f, ff_add(f, a, b));
        mul[static_cast<std::size_t>(i * q + j)] = ff_index(f, ff_mul(f, a, b));
      }
    std::vector<long> sq(static_cast<std::size_t>(q));
    for (long i = 0; i < q; ++i) sq[static_cast<std::size_t>(i)] = ff_index(f, frobenius(f, ff_from_index(f, i)));
    auto A = [&](long x, long y) { return add[static_cast<std::size_t>(x * q + y)]; };
    auto M = [&](long x, long y) { return mul[static_cast<std::size_t>(x * q + y)]; };
    std::vector<std::string> labels;
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) labels.push_back("U(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return GroupTable::from_rule(
        q * q,
        [&](long x, long y) {
          long a = x / q, b = x % q, a2 = y / q, b2 = y % q;
          long na = A(a, a2);
          long nb = A(A(b, b2), M(a2, sq[static_cast<std::size_t>(a)]));
          return na * q + nb;
        },
        std::move(labels));
  }
  if (which.n < 1 || !is_prime(which.p)) throw ParameterOutOfRange("A(n,p) requires n >= 1 and prime p");
  if (ipow(which.p, 3 * which.n) > kOrderCap) throw OrderCapExceeded("A(n,p) order exceeds cap");
  FieldSpec f = make_field(which.p, which.n);
  const long q = f.size();
  std::vector<long> add(static_cast<std::size_t>(q * q)), mul(static_cast<std::size_t>(q * q));
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < q; ++j) {
      FieldElem a = ff_from_index(f, i), b = ff_from_index(f, j);
      add[static_cast<std::size_t>(i * q + j)] = ff_index(f, ff_add(f, a, b));
      mul[static_cast<std::size_t>(i * q + j)] = ff_index(f, ff_mul(f, a, b));
    }
  auto A = [&](long x, long y) { return add[static_cast<std::size_t>(x * q + y)]; };
  auto M = [&](long x, long y) { return mul[static_cast<std::size_t>(x * q + y)]; };
  std::vector<std::string> labels;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        labels.push_back("V(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return GroupTable::from_rule(
      q * q * q,
      [&](long x, long y) {
        long a = x / (q * q), b = (x / q) % q, c = x % q;
        long a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
        return (A(a, a2) * q + A(A(b, b2), M(c, a2))) * q + A(c, c2);
      },
      std::move(labels));
}

}  // namespace ncg
