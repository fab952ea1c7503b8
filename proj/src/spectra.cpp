#include "ncg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ncg {

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Laplacian: return "L";
    case MatrixKind::SignlessLaplacian: return "Q";
  }
  return "?";
}

double DenseSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

void ExactSpectrum::add(const SurdValue& v, long mult) {
  if (mult <= 0) return;
  for (auto& [val, m] : entries)
    if (val == v) {
      m += mult;
      return;
    }
  entries.emplace_back(v, mult);
}

void ExactSpectrum::canonicalize() {
  std::vector<std::pair<SurdValue, long>> merged;
  for (const auto& [v, m] : entries) {
    if (m <= 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == v; });
    if (it == merged.end())
      merged.emplace_back(v, m);
    else
      it->second += m;
  }
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
    double dx = x.first.to_double(), dy = y.first.to_double();
    if (std::fabs(dx - dy) > 1e-6 * (1.0 + std::fabs(dx))) return dx > dy;
    return compare(x.first, y.first) > 0;
  });
  entries = std::move(merged);
}

long ExactSpectrum::total() const {
  long t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

std::vector<double> ExactSpectrum::expanded() const {
  std::vector<double> out;
  for (const auto& [v, m] : entries)
    for (long k = 0; k < m; ++k) out.push_back(v.to_double());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SurdExpr ExactSpectrum::sum() const {
  SurdExpr s;
  for (const auto& [v, m] : entries) s += SurdExpr(v) * SurdExpr(make_rational(m));
  return s;
}

std::string ExactSpectrum::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += "(" + entries[i].first.str() + ")^" + std::to_string(entries[i].second);
  }
  return s + "}";
}

std::vector<std::pair<double, long>> NumericSpectrum::grouped() const {
  std::vector<std::pair<double, long>> out;
  double radius = 1.0;
  for (double v : values) radius = std::max(radius, std::fabs(v));
  const double tol = grouping_tol * radius;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && std::fabs(values[j - 1] - values[j]) <= tol) sum += values[j++];
    out.emplace_back(sum / static_cast<double>(j - i), static_cast<long>(j - i));
    i = j;
  }
  return out;
}

std::vector<long> integer_matrix_of(const NCGraph& graph, MatrixKind kind) {
  const long n = graph.n();
  std::vector<long> m(static_cast<std::size_t>(n * n), 0);
  for (long i = 0; i < n; ++i) {
    long deg = 0;
    for (long j = 0; j < n; ++j)
      if (graph.adj.get(i, j)) {
        ++deg;
        m[static_cast<std::size_t>(i * n + j)] = kind == MatrixKind::Laplacian ? -1 : 1;
      }
    if (kind != MatrixKind::Adjacency) m[static_cast<std::size_t>(i * n + i)] = deg;
  }
  return m;
}

DenseSymMatrix matrix_from_ints(const std::vector<long>& m, long n) {
  DenseSymMatrix d;
  d.n = n;
  d.a.resize(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < d.a.size(); ++i) d.a[i] = static_cast<double>(m[i]);
  return d;
}

DenseSymMatrix matrix_of(const NCGraph& graph, MatrixKind kind) {
  return matrix_from_ints(integer_matrix_of(graph, kind), graph.n());
}

EigenDecomposition jacobi_eigen(const DenseSymMatrix& m, double tol, bool want_vectors) {
  const long n = m.n;
  std::vector<double> a = m.a;
  EigenDecomposition out;
  if (want_vectors) {
    out.vectors.assign(static_cast<std::size_t>(n * n), 0.0);
    for (long i = 0; i < n; ++i) out.vectors[static_cast<std::size_t>(i * n + i)] = 1.0;
  }
  auto A = [&](long i, long j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  const double norm = m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };
  int sweep = 0;
  while (norm > 0.0 && off_norm() > tol * norm) {
    if (sweep == 100) throw NoConvergence("Jacobi eigensolver did not converge in 100 sweeps");
    ++sweep;
    // Early sweeps only rotate the larger entries.
    const double thresh = sweep < 4 ? 0.2 * off_norm() / static_cast<double>(n * n) : 0.0;
    for (long p = 0; p < n; ++p) {
      for (long q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0 || std::fabs(apq) < thresh) continue;
        // Entries below the rounding level of both diagonals are dropped;
        // rotating them only churns roundoff and can stall convergence.
        const double g = 100.0 * std::fabs(apq);
        if (sweep > 4 && std::fabs(A(p, p)) + g == std::fabs(A(p, p)) && std::fabs(A(q, q)) + g == std::fabs(A(q, q))) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::fabs(theta) > 1e150
                             ? 0.5 / theta
                             : (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (long r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = A(r, p), arq = A(r, q);
          const double nrp = arp - s * (arq + tau * arp);
          const double nrq = arq + s * (arp - tau * arq);
          A(r, p) = A(p, r) = nrp;
          A(r, q) = A(q, r) = nrq;
        }
        if (want_vectors) {
          for (long r = 0; r < n; ++r) {
            double& vp = out.vectors[static_cast<std::size_t>(r * n + p)];
            double& vq = out.vectors[static_cast<std::size_t>(r * n + q)];
            const double gp = vp, gq = vq;
            vp = gp - s * (gq + tau * gp);
            vq = gq + s * (gp - tau * gq);
          }
        }
      }
    }
  }
  out.sweeps = sweep;
  out.values.resize(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = A(i, i);
  return out;
}

NumericSpectrum eigenvalues_sym(const DenseSymMatrix& m, double tol) {
  if (m.n > 4096) throw std::invalid_argument("eigenvalues_sym limited to n <= 4096");
  NumericSpectrum s;
  s.values = jacobi_eigen(m, tol, false).values;
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

namespace {

// prod_i (x - c_i) - sum_j w_j prod_{i != j} (x - c_i) over the distinct parts.
RationalPoly secular(const std::vector<Rational>& centers, const std::vector<Rational>& weights) {
  RationalPoly full = RationalPoly::constant(Rational(1));
  for (const auto& c : centers) full.mul_linear(c);
  for (std::size_t j = 0; j < centers.size(); ++j) {
    RationalPoly term = RationalPoly::constant(weights[j]);
    for (std::size_t i = 0; i < centers.size(); ++i)
      if (i != j) term.mul_linear(centers[i]);
    full -= term;
  }
  return full;
}

struct Factored {
  std::vector<std::pair<Rational, long>> linear;  // (root, multiplicity)
  RationalPoly rest;
};

Factored a_factored(const MultipartiteShape& shape) {
  Factored f;
  const long n = shape.n(), r = shape.r();
  f.linear.emplace_back(Rational(0), n - r);
  std::vector<Rational> centers, weights;
  for (auto [p, a] : shape.parts) {
    f.linear.emplace_back(Rational(-p), a - 1);
    centers.emplace_back(-p);
    weights.emplace_back(a * p);
  }
  f.rest = secular(centers, weights);
  return f;
}

Factored q_factored(const MultipartiteShape& shape) {
  Factored f;
  const long n = shape.n();
  std::vector<Rational> centers, weights;
  for (auto [p, a] : shape.parts) {
    f.linear.emplace_back(Rational(n - p), a * (p - 1));
    f.linear.emplace_back(Rational(n - 2 * p), a - 1);
    centers.emplace_back(n - 2 * p);
    weights.emplace_back(a * p);
  }
  f.rest = secular(centers, weights);
  return f;
}

RationalPoly expand(const Factored& f) {
  RationalPoly p = f.rest;
  for (const auto& [root, k] : f.linear) p.mul_linear(root, k);
  return p;
}

std::optional<ExactSpectrum> spectrum_of(const Factored& f) {
  auto rest = exact_roots(f.rest);
  if (!rest) return std::nullopt;
  ExactSpectrum s = *rest;
  for (const auto& [root, k] : f.linear) s.add(SurdValue(root), k);
  s.canonicalize();
  return s;
}

// 2 * max_k |a_{n-k}|^{1/k}, with the constant term halved (monic input).
double fujiwara_bound(const std::vector<BigInt>& g) {
  const long n = static_cast<long>(g.size()) - 1;
  double best = 0.0;
  for (long k = 1; k <= n; ++k) {
    const BigInt& c = g[static_cast<std::size_t>(n - k)];
    if (c == 0) continue;
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
    double lg = std::log2(std::fabs(mant)) + static_cast<double>(exp2);
    if (k == n) lg -= 1.0;
    best = std::max(best, lg / static_cast<double>(k));
  }
  return 2.0 * std::exp2(best);
}

bool is_root(const std::vector<BigInt>& g, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc == 0;
}

// Divides the monic integer polynomial g by (y - x) in place.
void deflate(std::vector<BigInt>& g, const BigInt& x) {
  const std::size_t n = g.size() - 1;
  std::vector<BigInt> q(n);
  BigInt carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = g[i + 1] + carry * x;
    q[i] = carry;
  }
  g = std::move(q);
}

}  // namespace

RationalPoly a_charpoly_multipartite(const MultipartiteShape& shape) { return expand(a_factored(shape)); }

RationalPoly q_polynomial_multipartite(const MultipartiteShape& shape) { return expand(q_factored(shape)); }

std::optional<ExactSpectrum> a_spectrum_multipartite(const MultipartiteShape& shape) {
  return spectrum_of(a_factored(shape));
}

std::optional<ExactSpectrum> q_spectrum_multipartite(const MultipartiteShape& shape) {
  return spectrum_of(q_factored(shape));
}

ExactSpectrum laplacian_spectrum_clique_complement(const std::vector<long>& cliques) {
  std::map<long, long> counts;
  long N = 0, L = 0;
  for (long c : cliques) {
    ++counts[c];
    N += c;
    ++L;
  }
  ExactSpectrum s;
  s.add(SurdValue::integer(0), 1);
  for (auto [m, l] : counts) s.add(SurdValue::integer(N - m), l * (m - 1));
  s.add(SurdValue::integer(N), L - 1);
  s.canonicalize();
  return s;
}

std::optional<ExactSpectrum> exact_roots(const RationalPoly& p) {
  ExactSpectrum out;
  if (p.degree() <= 0) return out;
  // Primitive integer form f, then the monic substitution y = lc * x.
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigInt> f;
  for (const auto& c : p.coeffs()) f.push_back(BigInt(c.get_num() * (den / c.get_den())));
  const std::size_t n = f.size() - 1;
  const BigInt lc = f.back();
  std::vector<BigInt> g(n + 1);
  g[n] = 1;
  BigInt power = 1;  // lc^(n-1-i), built from i = n-1 downward
  for (std::size_t i = n; i-- > 0;) {
    g[i] = f[i] * power;
    power *= lc;
  }
  auto to_x = [&](const Rational& y) { return Rational(y / lc); };

  std::size_t zeros = 0;
  while (zeros < n && g[zeros] == 0) ++zeros;
  if (zeros) {
    out.add(SurdValue(Rational(0)), static_cast<long>(zeros));
    g.erase(g.begin(), g.begin() + static_cast<long>(zeros));
  }

  if (g.size() > 1) {
    const double bound = std::min(fujiwara_bound(g), 1e7);
    const auto limit = static_cast<unsigned long>(std::ceil(bound)) + 1;
    for (unsigned long r = 1; r <= limit && g.size() > 1; ++r) {
      if (!mpz_divisible_ui_p(g[0].get_mpz_t(), r)) continue;
      for (long sgn : {1L, -1L}) {
        BigInt x = BigInt(static_cast<long>(r)) * sgn;
        long mult = 0;
        while (g.size() > 1 && is_root(g, x)) {
          deflate(g, x);
          ++mult;
        }
        if (mult) out.add(SurdValue(to_x(Rational(x))), mult);
      }
    }
  }

  if (g.size() > 1) {
    std::vector<Rational> rc(g.begin(), g.end());
    for (const auto& [factor, mult] : squarefree_decomposition(RationalPoly(rc))) {
      if (factor.degree() == 1) {
        out.add(SurdValue(to_x(Rational(-factor.coeff(0)))), mult);
      } else if (factor.degree() == 2) {
        const Rational b = factor.coeff(1), c = factor.coeff(0);
        const Rational disc = b * b - 4 * c;
        if (disc < 0) return std::nullopt;
        const Rational half = -b / 2;
        const BigInt radicand = disc.get_num() * disc.get_den();
        const Rational coef = Rational(1) / (2 * disc.get_den());
        SurdValue plus = SurdValue::make(half, coef, radicand);
        SurdValue minus = SurdValue::make(half, -coef, radicand);
        auto back = [&](const SurdValue& v) { return SurdValue::make(to_x(v.a()), to_x(v.b()), v.d()); };
        out.add(back(plus), mult);
        out.add(back(minus), mult);
      } else {
        return std::nullopt;
      }
    }
  }
  out.canonicalize();
  return out;
}

bool spectra_agree(const ExactSpectrum& exact, const NumericSpectrum& numeric, double tol) {
  std::vector<double> e = exact.expanded();
  if (e.size() != numeric.values.size()) throw LengthMismatch("spectra have different lengths");
  std::vector<double> v = numeric.values;
  std::sort(v.begin(), v.end(), std::greater<>());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (std::fabs(e[i] - v[i]) > tol) return false;
  return true;
}

}  // namespace ncg
