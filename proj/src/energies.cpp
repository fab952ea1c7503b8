#include "ncg/energies.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ncg {

std::string EnergyValue::str() const {
  if (exact) return exact->str();
  std::ostringstream os;
  os.precision(15);
  os << value;
  return os.str();
}

namespace {

SurdExpr abs_shifted(const SurdValue& v, const Rational& shift) {
  SurdValue s = SurdValue::make(v.a() - shift, v.b(), v.d());
  SurdExpr e(s);
  return compare(s, SurdValue(Rational(0))) < 0 ? -e : e;
}

SurdExpr deviation_sum(const ExactSpectrum& spec, const Rational& mean) {
  SurdExpr total;
  for (const auto& [v, mult] : spec.entries) total += abs_shifted(v, mean) * SurdExpr(make_rational(mult));
  return total;
}

double deviation_sum(const NumericSpectrum& spec, double mean) {
  double total = 0.0;
  for (double v : spec.values) total += std::fabs(v - mean);
  return total;
}

Rational mean_degree(long n, long m) {
  if (n <= 0) throw std::invalid_argument("energy of an empty graph");
  return make_rational(2 * m, n);
}

EnergyValue pick(const std::optional<ExactSpectrum>& exact, const std::optional<NumericSpectrum>& numeric,
                 SurdExpr (*fe)(const ExactSpectrum&, long, long), double (*fn)(const NumericSpectrum&, long, long),
                 long n, long m) {
  EnergyValue v;
  if (exact) {
    v.exact = fe(*exact, n, m);
    v.value = v.exact->to_double();
  } else if (numeric) {
    v.value = fn(*numeric, n, m);
  } else {
    throw std::invalid_argument("energy requires a spectrum");
  }
  return v;
}

SurdExpr exact_e(const ExactSpectrum& s, long, long) { return graph_energy(s); }
double numeric_e(const NumericSpectrum& s, long, long) { return graph_energy(s); }
SurdExpr exact_le(const ExactSpectrum& s, long n, long m) { return laplacian_energy(s, n, m); }
double numeric_le(const NumericSpectrum& s, long n, long m) { return laplacian_energy(s, n, m); }

}  // namespace

SurdExpr graph_energy(const ExactSpectrum& spec) { return deviation_sum(spec, Rational(0)); }
double graph_energy(const NumericSpectrum& spec) { return deviation_sum(spec, 0.0); }

SurdExpr laplacian_energy(const ExactSpectrum& spec, long n, long m) { return deviation_sum(spec, mean_degree(n, m)); }
double laplacian_energy(const NumericSpectrum& spec, long n, long m) {
  return deviation_sum(spec, to_double(mean_degree(n, m)));
}
SurdExpr signless_laplacian_energy(const ExactSpectrum& spec, long n, long m) { return laplacian_energy(spec, n, m); }
double signless_laplacian_energy(const NumericSpectrum& spec, long n, long m) { return laplacian_energy(spec, n, m); }

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Comparison compare_energies(const EnergyValue& x, const EnergyValue& y, double tol) {
  Comparison c;
  if (x.exact && y.exact) {
    c.exact = true;
    int s = compare(*x.exact, *y.exact);
    c.rel = s < 0 ? Relation::Less : s > 0 ? Relation::Greater : Relation::Equal;
    return c;
  }
  const double scale = std::max({1.0, std::fabs(x.value), std::fabs(y.value)});
  const double diff = x.value - y.value;
  c.rel = std::fabs(diff) <= tol * scale ? Relation::Equal : diff < 0 ? Relation::Less : Relation::Greater;
  return c;
}

bool EnergyOrdering::all_equal() const {
  return e_vs_leplus.rel == Relation::Equal && leplus_vs_le.rel == Relation::Equal;
}

bool EnergyOrdering::strict_increasing() const {
  return e_vs_leplus.rel == Relation::Less && leplus_vs_le.rel == Relation::Less;
}

std::string EnergyOrdering::str() const {
  std::string s = std::string("E ") + relation_symbol(e_vs_leplus.rel) + " LE+ " + relation_symbol(leplus_vs_le.rel) +
                  " LE";
  // The chain leaves E vs LE open when the two relations point opposite ways.
  const bool open = (e_vs_leplus.rel == Relation::Less && leplus_vs_le.rel == Relation::Greater) ||
                    (e_vs_leplus.rel == Relation::Greater && leplus_vs_le.rel == Relation::Less);
  if (open) s += std::string(", E ") + relation_symbol(e_vs_le.rel) + " LE";
  if (!exact()) s += " (approx)";
  return s;
}

EnergyFlags classify(const EnergyReport& r, double tol) {
  EnergyValue reference;
  reference.value = 2.0 * static_cast<double>(r.n_vertices - 1);
  reference.exact = SurdExpr::integer(2 * (r.n_vertices - 1));
  EnergyValue vertices;
  vertices.value = static_cast<double>(r.n_vertices);
  vertices.exact = SurdExpr::integer(r.n_vertices);
  EnergyFlags f;
  f.hypoenergetic = compare_energies(r.E, vertices, tol).rel == Relation::Less;
  f.hyperenergetic = compare_energies(r.E, reference, tol).rel == Relation::Greater;
  f.l_hyper = compare_energies(r.LE, reference, tol).rel == Relation::Greater;
  f.q_hyper = compare_energies(r.LEplus, reference, tol).rel == Relation::Greater;
  return f;
}

EnergyOrdering energy_ordering(const EnergyReport& r, double tol) {
  EnergyOrdering o;
  o.e_vs_leplus = compare_energies(r.E, r.LEplus, tol);
  o.leplus_vs_le = compare_energies(r.LEplus, r.LE, tol);
  o.e_vs_le = compare_energies(r.E, r.LE, tol);
  return o;
}

EnergyReport energy_report(long n, long m, const std::optional<ExactSpectrum>& a_exact,
                           const std::optional<ExactSpectrum>& l_exact, const std::optional<ExactSpectrum>& q_exact,
                           const std::optional<NumericSpectrum>& a_num, const std::optional<NumericSpectrum>& l_num,
                           const std::optional<NumericSpectrum>& q_num, double tol) {
  EnergyReport r;
  r.n_vertices = n;
  r.n_edges = m;
  r.mean_degree = mean_degree(n, m);
  r.E = pick(a_exact, a_num, exact_e, numeric_e, n, m);
  r.LE = pick(l_exact, l_num, exact_le, numeric_le, n, m);
  r.LEplus = pick(q_exact, q_num, exact_le, numeric_le, n, m);
  r.flags = classify(r, tol);
  r.ordering = energy_ordering(r, tol);
  return r;
}

}  // namespace ncg
