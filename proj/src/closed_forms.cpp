#include "ncg/closed_forms.hpp"

#include <cmath>

namespace ncg {

namespace {

long param(const FamilyFormula& f, std::size_t i) {
  if (i >= f.params.size()) throw ParameterOutOfTheoremRange("missing parameter for " + f.str());
  return f.params[i];
}

void require(bool ok, const FamilyFormula& f, const std::string& why) {
  if (!ok) throw ParameterOutOfTheoremRange(f.str() + ": " + why);
}

Rational R(long num, long den = 1) { return make_rational(num, den); }
Rational R(const BigInt& v) { return Rational(v); }
SurdExpr S(const Rational& q) { return SurdExpr(q); }
SurdExpr root(const BigInt& d, const Rational& c = Rational(1)) { return SurdExpr::sqrt_of(d, c); }

BigInt power(long base, long e) { return pow(BigInt(base), static_cast<unsigned long>(e)); }

// c +- b*sqrt(d), one each.
void add_pair(ExactSpectrum& s, const Rational& c, const Rational& b, const BigInt& d) {
  s.add(SurdValue::make(c, b, d), 1);
  s.add(SurdValue::make(c, -b, d), 1);
}

void add(ExactSpectrum& s, const Rational& v, long mult) { s.add(SurdValue(v), mult); }

MultipartiteShape shape_of(std::initializer_list<std::pair<long, long>> count_size) {
  std::vector<long> cliques;
  for (auto [count, size] : count_size)
    for (long k = 0; k < count; ++k) cliques.push_back(size);
  return shape_from_cliques(cliques);
}

BigInt k1(long n) { return square_value(SquareKind::K1, n); }
BigInt k2(long n) { return square_value(SquareKind::K2, n); }
BigInt k3(long n) { return square_value(SquareKind::K3, n); }
BigInt k4(long n) { return square_value(SquareKind::K4, n); }

long group_order(const FamilyFormula& f) {
  switch (f.family) {
    case FormulaFamily::Dihedral: return 2 * param(f, 0);
    case FormulaFamily::Quasidihedral: return 1L << param(f, 0);
    case FormulaFamily::M2rs: return 2 * param(f, 0) * param(f, 1);
    case FormulaFamily::Dicyclic: return 4 * param(f, 0);
    case FormulaFamily::U6n: return 6 * param(f, 0);
    case FormulaFamily::QuotientDihedral: return 2 * param(f, 0) * param(f, 1);
    case FormulaFamily::QuotientZpZp: return param(f, 0) * param(f, 0) * param(f, 1);
    case FormulaFamily::QuotientSz2: return 20 * param(f, 0);
    case FormulaFamily::HanakiV: return 1L << (2 * param(f, 0));
    case FormulaFamily::HanakiP: return power(param(f, 1), 3 * param(f, 0)).get_si();
    case FormulaFamily::SD8n:
    case FormulaFamily::V8n: return 8 * param(f, 0);
    case FormulaFamily::Frobenius: return param(f, 0) * param(f, 1);
  }
  return 0;
}

}  // namespace

std::string FamilyFormula::str() const {
  auto p = [&](std::size_t i) { return i < params.size() ? std::to_string(params[i]) : std::string("?"); };
  switch (family) {
    case FormulaFamily::Dihedral: return "Dihedral(m=" + p(0) + ")";
    case FormulaFamily::Quasidihedral: return "Quasidihedral(n=" + p(0) + ")";
    case FormulaFamily::M2rs: return "M2rs(r=" + p(0) + ",s=" + p(1) + ")";
    case FormulaFamily::Dicyclic: return "Dicyclic(n=" + p(0) + ")";
    case FormulaFamily::U6n: return "U6n(n=" + p(0) + ")";
    case FormulaFamily::QuotientDihedral: return "QuotientDihedral(m=" + p(0) + ",z=" + p(1) + ")";
    case FormulaFamily::QuotientZpZp: return "QuotientZpZp(p=" + p(0) + ",z=" + p(1) + ")";
    case FormulaFamily::QuotientSz2: return "QuotientSz2(z=" + p(0) + ")";
    case FormulaFamily::HanakiV: return "HanakiV(n=" + p(0) + ")";
    case FormulaFamily::HanakiP: return "HanakiP(n=" + p(0) + ",p=" + p(1) + ")";
    case FormulaFamily::SD8n: return "SD8n(n=" + p(0) + ")";
    case FormulaFamily::V8n: return "V8n(n=" + p(0) + ")";
    case FormulaFamily::Frobenius: return "Frobenius(p=" + p(0) + ",q=" + p(1) + ")";
  }
  return "?";
}

void check_range(const FamilyFormula& f) {
  const long a = param(f, 0);
  switch (f.family) {
    case FormulaFamily::Dihedral: require(a >= 3, f, "m >= 3"); break;
    case FormulaFamily::Quasidihedral: require(a >= 4 && a <= 20, f, "4 <= n <= 20"); break;
    case FormulaFamily::M2rs: require(a >= 3 && param(f, 1) >= 1, f, "r >= 3, s >= 1"); break;
    case FormulaFamily::Dicyclic: require(a >= 2, f, "n >= 2"); break;
    case FormulaFamily::U6n: require(a >= 1, f, "n >= 1"); break;
    case FormulaFamily::QuotientDihedral: require(a >= 3 && param(f, 1) >= 1, f, "m >= 3, z >= 1"); break;
    case FormulaFamily::QuotientZpZp:
      require(is_prime(a) && param(f, 1) >= 1 && param(f, 1) % a == 0, f, "p prime, p | z");
      break;
    case FormulaFamily::QuotientSz2: require(a >= 1, f, "z >= 1"); break;
    case FormulaFamily::HanakiV: require(a >= 2 && a <= 20, f, "2 <= n <= 20"); break;
    case FormulaFamily::HanakiP:
      require(a >= 1 && is_prime(param(f, 1)) && 3 * a * std::log2(param(f, 1)) < 60, f, "n >= 1, p prime");
      break;
    case FormulaFamily::SD8n:
    case FormulaFamily::V8n: require(a >= 2, f, "n >= 2"); break;
    case FormulaFamily::Frobenius: {
      const long q = param(f, 1);
      require(is_prime(a) && q >= 2 && (a - 1) % q == 0, f, "p prime, q >= 2, q | p-1");
      break;
    }
  }
}

std::string theorem_id(const FamilyFormula& f) {
  check_range(f);
  const bool odd = param(f, 0) % 2 != 0;
  switch (f.family) {
    case FormulaFamily::Dihedral: return odd ? "Dihedral1" : "Dihedral2";
    case FormulaFamily::Quasidihedral: return "Quasidihedral";
    case FormulaFamily::M2rs: return odd ? "M_2rs1" : "M_2rs2";
    case FormulaFamily::Dicyclic: return "Quarternion";
    case FormulaFamily::U6n: return "U6n";
    case FormulaFamily::QuotientDihedral: return "D2m";
    case FormulaFamily::QuotientZpZp: return "Z_p*Z_p";
    case FormulaFamily::QuotientSz2: return "Suzuki";
    case FormulaFamily::HanakiV: return "Hanaki1";
    case FormulaFamily::HanakiP: return "Hanaki2";
    case FormulaFamily::SD8n: return odd ? "SD_8n1" : "SD_8n2";
    case FormulaFamily::V8n: return odd ? "V8n1" : "V8n2";
    case FormulaFamily::Frobenius: return "pq1";
  }
  return "?";
}

ExactSpectrum closed_qspec(const FamilyFormula& f) {
  check_range(f);
  ExactSpectrum s;
  const long a = param(f, 0);
  switch (f.family) {
    case FormulaFamily::Dihedral: {
      const long m = a;
      if (m % 2) {
        add(s, R(m), m - 2);
        add(s, R(2 * m - 3), m - 1);
        add_pair(s, R(4 * m - 3, 2), R(1, 2), k1(m));
      } else {
        add(s, R(2 * m - 4), m / 2);
        add(s, R(m), m - 3);
        add(s, R(2 * m - 6), m / 2 - 1);
        add_pair(s, R(2 * m - 3), R(1), k2(m));
      }
      break;
    }
    case FormulaFamily::Quasidihedral: {
      const long N = 1L << a;
      add(s, R(N - 4), N / 4);
      add(s, R(N / 2), N / 2 - 3);
      add(s, R(N - 6), N / 4 - 1);
      add_pair(s, R(N - 3), R(1), k4(a));
      break;
    }
    case FormulaFamily::M2rs: {
      const long r = a, t = param(f, 1);
      if (r % 2) {
        add(s, R(2 * t * (r - 1)), r * (t - 1));
        add(s, R(r * t), (r - 1) * t - 1);
        add(s, R((2 * r - 3) * t), r - 1);
        add_pair(s, R(t * (4 * r - 3), 2), R(t, 2), k1(r));
      } else {
        add(s, R(2 * t * (r - 2)), r * t - r / 2);
        add(s, R(r * t), r * t - 2 * t - 1);
        add(s, R(2 * t * (r - 3)), r / 2 - 1);
        // Roots of x^2 - (4r-6)s x + ...: centred at (2r-3)s.
        add_pair(s, R((2 * r - 3) * t), R(t), k2(r));
      }
      break;
    }
    case FormulaFamily::Dicyclic: {
      const long n = a;
      add(s, R(4 * n - 4), n);
      add(s, R(2 * n), 2 * n - 3);
      add(s, R(4 * n - 6), n - 1);
      add_pair(s, R(4 * n - 3), R(1), k1(n));
      break;
    }
    case FormulaFamily::U6n: {
      const long n = a;
      add(s, R(3 * n), 2 * n + 1);
      add(s, R(4 * n), 3 * n - 3);
      add_pair(s, R(9 * n, 2), R(n, 2), BigInt(33));
      break;
    }
    case FormulaFamily::QuotientDihedral: {
      const long m = a, n = param(f, 1);
      add(s, R((2 * m - 2) * n), m * (n - 1));
      add(s, R(m * n), (m - 1) * n - 1);
      add(s, R((2 * m - 3) * n), m - 1);
      add_pair(s, R(n * (4 * m - 3), 2), R(n, 2), k1(m));
      break;
    }
    case FormulaFamily::QuotientZpZp: {
      const long p = a, n = param(f, 1);
      add(s, R(p * n * (p - 1)), (p * p - 1) * n - (p + 1));
      add(s, R(n * (p - 1) * (p - 1)), p);
      add(s, R(2 * p * n * (p - 1)), 1);
      break;
    }
    case FormulaFamily::QuotientSz2: {
      const long n = a;
      add(s, R(16 * n), 15 * n - 5);
      add(s, R(15 * n), 4 * n - 1);
      add(s, R(13 * n), 4);
      add_pair(s, R(43 * n, 2), R(n, 2), BigInt(409));
      break;
    }
    case FormulaFamily::HanakiV: {
      const long N = 1L << a;
      add(s, R(N * N - 2 * N), N * N - 2 * N + 1);
      add(s, R(N * N - 3 * N), N - 2);
      add(s, R(2 * N * N - 4 * N), 1);
      break;
    }
    case FormulaFamily::HanakiP: {
      const BigInt P = power(param(f, 1), a);
      const long Pl = P.get_si();
      add(s, R(BigInt(P * P * P - P * P)), (Pl + 1) * (Pl * Pl - Pl - 1));
      add(s, R(BigInt(P * P * P - 2 * P * P + P)), Pl);
      add(s, R(BigInt(2 * P * P * P - 2 * P * P)), 1);
      break;
    }
    case FormulaFamily::SD8n:
    case FormulaFamily::V8n: {
      const long n = a;
      const bool first_form = (f.family == FormulaFamily::SD8n) == (n % 2 != 0);
      if (first_form) {
        add(s, R(8 * n - 8), 3 * n);
        add(s, R(4 * n), 4 * n - 5);
        add(s, R(8 * n - 12), n - 1);
        add_pair(s, R(8 * n - 6), R(2), k1(n));
      } else {
        add(s, R(8 * n - 4), 2 * n);
        add(s, R(4 * n), 4 * n - 3);
        add(s, R(8 * n - 6), 2 * n - 1);
        add_pair(s, R(8 * n - 3), R(1), k3(n));
      }
      break;
    }
    case FormulaFamily::Frobenius: {
      const long p = a, q = param(f, 1);
      add(s, R(p * q - p), p - 2);
      add(s, R(p * q - q), p * q - 2 * p);
      add(s, R(p * q - 2 * q + 1), p - 1);
      const BigInt d = BigInt(p * q) * (p * q - 2) + BigInt(4) * (p - q) * (p * q - p - q + 1) + 1;
      add_pair(s, R(3 * p * q - 2 * p - 2 * q + 1, 2), R(1, 2), d);
      break;
    }
  }
  s.canonicalize();
  return s;
}

MultipartiteShape expected_shape(const FamilyFormula& f) {
  check_range(f);
  const long a = param(f, 0);
  switch (f.family) {
    case FormulaFamily::Dihedral:
      return a % 2 ? shape_of({{a, 1}, {1, a - 1}}) : shape_of({{a / 2, 2}, {1, a - 2}});
    case FormulaFamily::Quasidihedral: {
      const long N = 1L << a;
      return shape_of({{N / 4, 2}, {1, N / 2 - 2}});
    }
    case FormulaFamily::M2rs: {
      const long r = a, s = param(f, 1);
      return r % 2 ? shape_of({{r, s}, {1, (r - 1) * s}}) : shape_of({{r / 2, 2 * s}, {1, r * s - 2 * s}});
    }
    case FormulaFamily::Dicyclic: return shape_of({{a, 2}, {1, 2 * a - 2}});
    case FormulaFamily::U6n: return shape_of({{3, a}, {1, 2 * a}});
    case FormulaFamily::QuotientDihedral: {
      const long m = a, n = param(f, 1);
      return shape_of({{m, n}, {1, (m - 1) * n}});
    }
    case FormulaFamily::QuotientZpZp: return shape_of({{a + 1, (a - 1) * param(f, 1)}});
    case FormulaFamily::QuotientSz2: return shape_of({{5, 3 * a}, {1, 4 * a}});
    case FormulaFamily::HanakiV: {
      const long N = 1L << a;
      return shape_of({{N - 1, N}});
    }
    case FormulaFamily::HanakiP: {
      const long P = power(param(f, 1), a).get_si();
      return shape_of({{P + 1, P * P - P}});
    }
    case FormulaFamily::SD8n:
    case FormulaFamily::V8n: {
      const bool first_form = (f.family == FormulaFamily::SD8n) == (a % 2 != 0);
      return first_form ? shape_of({{a, 4}, {1, 4 * a - 4}}) : shape_of({{2 * a, 2}, {1, 4 * a - 2}});
    }
    case FormulaFamily::Frobenius: return shape_of({{1, a - 1}, {a, param(f, 1) - 1}});
  }
  return {};
}

ClosedEnergies closed_energies(const FamilyFormula& f) {
  check_range(f);
  ClosedEnergies e;
  const long a = param(f, 0);
  switch (f.family) {
    case FormulaFamily::Dihedral: {
      const long m = a;
      if (m % 2) {
        e.E = S(R(m - 1)) + root(BigInt((m - 1) * (5 * m - 1)));
        e.LE = S(R(2 * m * (m - 1) * (m - 2) + 2 * m * (2 * m - 1), 2 * m - 1));
        e.LEplus = m == 3 ? S(R(9, 5)) + root(33)
                          : S(R(2 * m * m * m - 10 * m * m + 12 * m - 3, 2 * m - 1)) + root(k1(m));
      } else {
        e.E = S(R(m - 2)) + root(BigInt((m - 2) * (5 * m - 2)));
        e.LE = S(R(m * (m - 2) * (m - 4) + 2 * m * (m - 1), m - 1));
        const Rational rat = m <= 8 ? R(m * m * m - 4 * m * m + 12, 2 * m - 2)
                                    : R(m * m * m - 8 * m * m + 16 * m - 6, m - 1);
        e.LEplus = S(rat) + root(k2(m), R(2));
      }
      break;
    }
    case FormulaFamily::Quasidihedral: {
      const long n = a;
      const BigInt p = power(2, n);
      const BigInt h = power(2, n - 2);
      e.E = S(R(BigInt(p / 2 - 2))) + root(BigInt((5 * h - 1) * (h - 1)), R(2));
      e.LE = S(R(BigInt(power(2, 3 * n - 3) - power(2, 2 * n) + 3 * p)) / R(BigInt(p / 2 - 1)));
      e.LEplus = n == 4 ? S(R(134, 7)) + root(73, R(2))
                        : S(R(BigInt(power(2, 3 * n - 2) + power(2, n + 4) - power(2, 2 * n + 2) - 12)) /
                            R(BigInt(p - 2))) +
                              root(k4(n), R(2));
      break;
    }
    case FormulaFamily::M2rs: {
      const long r = a, s = param(f, 1);
      if (r % 2) {
        e.E = S(R(s * (r - 1))) + root(BigInt((r - 1) * (5 * r - 1)), R(s));
        e.LE = S(R(s * (2 * r * r * r * s - 6 * r * r * s + 4 * r * s + 4 * r * r - 2 * r), 2 * r - 1));
        e.LEplus = r == 3 ? S(R(3 * s * (4 * s - 1), 5)) + root(33, R(s))
                          : S(R(s) * (R(2 * r * (r - 1) * (r - 2) * s, 2 * r - 1) - R(2 * r - 3))) +
                                root(k1(r), R(s));
      } else {
        e.E = S(R(s * (r - 2))) + root(BigInt((r - 2) * (5 * r - 2)), R(s));
        e.LE = S(R(s * (r * r * r * s - 6 * r * r * s + 8 * r * s + 2 * r * r - 2 * r), r - 1));
        const long core = r * r * r * s - 6 * r * r * s + 8 * r * s;
        const Rational rat = r <= 8 ? R(s) * (R(core) - R(r * r * r, 2) + R(4 * r * r - 8 * r + 6)) / R(r - 1)
                                    : R(s * (core - 2 * r * r + 8 * r - 6), r - 1);
        e.LEplus = S(rat) + root(k2(r), R(2 * s));
      }
      break;
    }
    case FormulaFamily::Dicyclic: {
      const long n = a;
      e.E = S(R(2 * (n - 1))) + root(BigInt((n - 1) * (5 * n - 1)), R(2));
      e.LE = S(R(8 * n * (n - 1) * (n - 2) + 4 * n * (2 * n - 1), 2 * n - 1));
      const long num = n <= 4 ? 4 * n * n * n - 8 * n * n + 6 : 8 * n * n * n - 32 * n * n + 32 * n - 6;
      e.LEplus = S(R(num, 2 * n - 1)) + root(k1(n), R(2));
      break;
    }
    case FormulaFamily::U6n: {
      const long n = a;
      e.E = S(R(2 * n)) + root(7, R(2 * n));
      e.LE = S(R(12 * n * n + 30 * n, 5));
      e.LEplus = S(R(12 * n * n - 3 * n, 5)) + root(33, R(n));
      break;
    }
    case FormulaFamily::QuotientDihedral: {
      const long m = a, n = param(f, 1);
      e.E = S(R(n * (m - 1))) + root(BigInt((m - 1) * (5 * m - 1)), R(n));
      e.LE = S(R(n * ((2 * m * m * m - 6 * m * m + 4 * m) * n + 4 * m * m - 2 * m), 2 * m - 1));
      if (m == 3)
        e.LEplus = S(R(12 * n * n - 3 * n, 5)) + root(33, R(n));
      else if (m == 4)
        e.LEplus = S(R(48 * n * n - 29 * n, 7)) + root(73, R(n));
      else
        e.LEplus = S(R((2 * m * m * m - 6 * m * m + 4 * m) * n * n - (4 * m * m - 8 * m + 3) * n, 2 * m - 1)) +
                   root(k1(m), R(n));
      break;
    }
    case FormulaFamily::QuotientZpZp: {
      const long p = a, n = param(f, 1);
      e.E = e.LE = e.LEplus = S(R(2 * p * (p - 1) * n));
      break;
    }
    case FormulaFamily::QuotientSz2: {
      const long n = a;
      e.E = S(R(12 * n)) + root(6, R(8 * n));
      e.LE = S((R(120 * n, 19) + R(30)) * R(n));
      e.LEplus = S(R(120 * n * n + 177 * n, 19)) + root(409, R(n));
      break;
    }
    case FormulaFamily::HanakiV: {
      e.E = e.LE = e.LEplus = S(R(BigInt(power(2, 2 * a + 1) - power(2, a + 2))));
      break;
    }
    case FormulaFamily::HanakiP: {
      const BigInt P = power(param(f, 1), a);
      e.E = e.LE = e.LEplus = S(R(BigInt(2 * (P * P * P - P * P))));
      break;
    }
    case FormulaFamily::SD8n:
    case FormulaFamily::V8n: {
      const long n = a;
      const bool first_form = (f.family == FormulaFamily::SD8n) == (n % 2 != 0);
      if (first_form) {
        e.E = S(R(4 * (n - 1))) + root(BigInt((n - 1) * (5 * n - 1)), R(4));
        e.LE = S(R(8 * n * (4 * n * n - 10 * n + 7), 2 * n - 1));
        const long general = 32 * n * n * n - 112 * n * n + 96 * n - 12;
        if (f.family == FormulaFamily::SD8n)
          e.LEplus = n == 3 ? S(R(36)) + root(33, R(4)) : S(R(general, 2 * n - 1)) + root(k1(n), R(4));
        else
          e.LEplus = S(R(n <= 4 ? 24 * n * n * n - 64 * n * n + 32 * n + 12 : general, 2 * n - 1)) +
                     root(k1(n), R(4));
      } else {
        e.E = S(R(2 * (2 * n - 1))) + root(BigInt((2 * n - 1) * (10 * n - 1)), R(2));
        e.LE = S(R(8 * n * (8 * n * n - 8 * n + 3), 4 * n - 1));
        const Rational general = R(64 * n * n * n - 128 * n * n + 64 * n - 6, 4 * n - 1);
        e.LEplus = f.family == FormulaFamily::SD8n && n == 2 ? S(R(134, 7)) + root(73, R(2))
                                                              : S(general) + root(k3(n), R(2));
      }
      break;
    }
    case FormulaFamily::Frobenius: {
      const long p = a, q = param(f, 1);
      const long alpha = (p - 1) * (q - 1);
      e.E = S(R(alpha)) + root(BigInt(alpha * alpha + 4 * p * alpha));
      e.LE = S(R(2 * p * p * alpha + 2 * p * (q - 1) * (q - 1), p * q - 1));
      const long num = 2 * p * p * p * q - p * p * q * q - 2 * p * q * q - 6 * p * q - 4 * p * p * p + 6 * p * p + 2 * q - 1;
      const BigInt d = BigInt(p * q) * (p * q - 2) + BigInt(4) * (p - q) * (p * q - p - q + 1) + 1;
      e.LEplus = S(R(num, p * q - 1)) + root(d);
      break;
    }
  }
  return e;
}

ClosedFormReport closed_form_report(const FamilyFormula& f) {
  ClosedFormReport r;
  r.qspec = closed_qspec(f);
  const MultipartiteShape shape = expected_shape(f);
  std::vector<long> cliques;
  for (auto [size, count] : shape.parts)
    for (long k = 0; k < count; ++k) cliques.push_back(size);
  r.lspec = laplacian_spectrum_clique_complement(cliques);
  r.aspec = a_spectrum_multipartite(shape);
  const ClosedEnergies e = closed_energies(f);
  r.E = e.E;
  r.LE = e.LE;
  r.LEplus = e.LEplus;
  return r;
}

long expected_center_size(const FamilyFormula& f) { return group_order(f) - expected_shape(f).n(); }

GroupSpec witness_spec(const FamilyFormula& f) {
  check_range(f);
  const long a = param(f, 0);
  switch (f.family) {
    case FormulaFamily::Dihedral: return GroupSpec::dihedral(a);
    case FormulaFamily::Quasidihedral: return GroupSpec::quasidihedral(a);
    case FormulaFamily::M2rs: return GroupSpec::m2rs(a, param(f, 1));
    case FormulaFamily::Dicyclic: return GroupSpec::dicyclic(a);
    case FormulaFamily::U6n: return GroupSpec::u6n(a);
    case FormulaFamily::QuotientDihedral: {
      const long m = a, z = param(f, 1);
      // Z(D_{2m}) is trivial for m odd and has order 2 for m even.
      if (m % 2) return z == 1 ? GroupSpec::dihedral(m) : GroupSpec::product(GroupSpec::dihedral(m), GroupSpec::cyclic(z));
      if (z % 2 == 0)
        return z == 2 ? GroupSpec::dihedral(2 * m)
                      : GroupSpec::product(GroupSpec::dihedral(2 * m), GroupSpec::cyclic(z / 2));
      throw NoWitness("no witness group for " + f.str() + " (m even needs z even)");
    }
    case FormulaFamily::QuotientZpZp: {
      const long p = a, z = param(f, 1);
      const GroupSpec base = GroupSpec::hanaki_p(1, p);
      return z == p ? base : GroupSpec::product(base, GroupSpec::cyclic(z / p));
    }
    case FormulaFamily::QuotientSz2: {
      const GroupSpec base = GroupSpec::frobenius(5, 4);
      return a == 1 ? base : GroupSpec::product(base, GroupSpec::cyclic(a));
    }
    case FormulaFamily::HanakiV: return GroupSpec::hanaki_v(a);
    case FormulaFamily::HanakiP: return GroupSpec::hanaki_p(a, param(f, 1));
    case FormulaFamily::SD8n: return GroupSpec::sd8n(a);
    case FormulaFamily::V8n: return GroupSpec::v8n(a);
    case FormulaFamily::Frobenius: return GroupSpec::frobenius(a, param(f, 1));
  }
  throw NoWitness("no witness group for " + f.str());
}

std::optional<DiscriminantLink> discriminant_link(const FamilyFormula& f) {
  check_range(f);
  const long a = param(f, 0);
  const bool odd = a % 2 != 0;
  switch (f.family) {
    case FormulaFamily::Dihedral: return DiscriminantLink{odd ? SquareKind::K1 : SquareKind::K2, a};
    case FormulaFamily::M2rs: return DiscriminantLink{odd ? SquareKind::K1 : SquareKind::K2, a};
    case FormulaFamily::Quasidihedral: return DiscriminantLink{SquareKind::K4, a};
    case FormulaFamily::Dicyclic: return DiscriminantLink{SquareKind::K1, a};
    case FormulaFamily::QuotientDihedral: return DiscriminantLink{SquareKind::K1, a};
    case FormulaFamily::SD8n: return DiscriminantLink{odd ? SquareKind::K1 : SquareKind::K3, a};
    case FormulaFamily::V8n: return DiscriminantLink{odd ? SquareKind::K3 : SquareKind::K1, a};
    default: return std::nullopt;
  }
}

}  // namespace ncg
