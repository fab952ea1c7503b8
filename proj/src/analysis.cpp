#include "ncg/analysis.hpp"

#include <cmath>

#include "ncg/integrality.hpp"

namespace ncg {

bool Analysis::checks_pass() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

void trace_checks(Analysis& out, long n, long m) {
  const Rational two_m = make_rational(2 * m);
  auto exact = [&](const char* name, const std::optional<ExactSpectrum>& s, const Rational& want) {
    if (!s) return;
    SurdExpr sum = s->sum();
    out.checks.push_back({name, sum == SurdExpr(want), sum.str(), to_string(want), std::fabs(sum.to_double() - to_double(want))});
  };
  exact("trace A exact", out.a_exact, Rational(0));
  exact("trace L exact", out.l_exact, two_m);
  exact("trace Q exact", out.q_exact, two_m);

  const double tol = 1e-6 * static_cast<double>(n);
  auto numeric = [&](const char* name, const std::optional<NumericSpectrum>& s, double want) {
    if (!s) return;
    double sum = 0.0;
    for (double v : s->values) sum += v;
    out.checks.push_back({name, std::fabs(sum - want) < tol, std::to_string(sum), std::to_string(want), std::fabs(sum - want)});
  };
  numeric("trace A numeric", out.a_num, 0.0);
  numeric("trace L numeric", out.l_num, static_cast<double>(2 * m));
  numeric("trace Q numeric", out.q_num, static_cast<double>(2 * m));
}

void agreement_check(Analysis& out, const char* name, const std::optional<ExactSpectrum>& e,
                     const std::optional<NumericSpectrum>& v, double tol) {
  if (!e || !v) return;
  std::vector<double> ex = e->expanded();
  double worst = 0.0;
  for (std::size_t i = 0; i < ex.size() && i < v->values.size(); ++i)
    worst = std::max(worst, std::fabs(ex[i] - v->values[i]));
  bool ok = false;
  try {
    ok = spectra_agree(*e, *v, tol);
  } catch (const LengthMismatch&) {
    ok = false;
  }
  out.checks.push_back({name, ok, e->str(), "jacobi", worst});
}

}  // namespace

Analysis analyze_graph(const NCGraph& graph, const AnalyzeOptions& opts) {
  Analysis out;
  const long n = graph.n(), m = graph.edge_count;
  if (n == 0) throw std::invalid_argument("cannot analyze an empty graph");

  if (auto cliques = complement_clique_decomposition(graph)) {
    out.shape = shape_from_cliques(*cliques);
    out.exact_source = "multipartite";
    out.a_exact = a_spectrum_multipartite(*out.shape);
    out.q_exact = q_spectrum_multipartite(*out.shape);
    out.l_exact = laplacian_spectrum_clique_complement(*cliques);
  } else if (n <= opts.charpoly_cap) {
    out.exact_source = "charpoly";
    out.a_exact = exact_roots(charpoly_exact(integer_matrix_of(graph, MatrixKind::Adjacency), static_cast<int>(n)));
    out.l_exact = exact_roots(charpoly_exact(integer_matrix_of(graph, MatrixKind::Laplacian), static_cast<int>(n)));
    out.q_exact =
        exact_roots(charpoly_exact(integer_matrix_of(graph, MatrixKind::SignlessLaplacian), static_cast<int>(n)));
  } else {
    out.exact_source = "none";
  }

  const bool small = n <= opts.numeric_cap;
  if (small || !out.a_exact) out.a_num = eigenvalues_sym(matrix_of(graph, MatrixKind::Adjacency));
  if (small || !out.l_exact) out.l_num = eigenvalues_sym(matrix_of(graph, MatrixKind::Laplacian));
  if (small || !out.q_exact) out.q_num = eigenvalues_sym(matrix_of(graph, MatrixKind::SignlessLaplacian));

  trace_checks(out, n, m);
  agreement_check(out, "A exact vs numeric", out.a_exact, out.a_num, opts.tol);
  agreement_check(out, "L exact vs numeric", out.l_exact, out.l_num, opts.tol);
  agreement_check(out, "Q exact vs numeric", out.q_exact, out.q_num, opts.tol);

  out.energies = energy_report(n, m, out.a_exact, out.l_exact, out.q_exact, out.a_num, out.l_num, out.q_num, opts.tol);

  if (out.q_exact) {
    out.q_integral = is_q_integral(*out.q_exact);
    out.q_integral_exact = true;
  } else if (out.exact_source != "none") {
    // exact_roots only gives up on a factor with no rational roots.
    out.q_integral = false;
    out.q_integral_exact = true;
  } else {
    out.q_integral = true;
    for (double v : out.q_num->values)
      if (std::fabs(v - std::round(v)) > 1e-6) out.q_integral = false;
  }
  return out;
}

Analysis analyze_group(const GroupSpec& spec, const AnalyzeOptions& opts) {
  const GroupTable g = build_group(spec);
  Analysis out = analyze_graph(noncommuting_graph(g), opts);
  out.spec = spec.str();
  out.group_order = g.order();
  out.center_size = center(g).size;
  return out;
}

}  // namespace ncg
