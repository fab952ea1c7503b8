#pragma once

#include <optional>
#include <string>

#include "ncg/spectra.hpp"
#include "ncg/surd.hpp"

namespace ncg {

// Float value, plus the exact surd expression when it came from an exact spectrum.
struct EnergyValue {
  double value = 0.0;
  std::optional<SurdExpr> exact;
  bool is_exact() const { return exact.has_value(); }
  std::string str() const;  // exact text, else the value to 15 significant digits
};

SurdExpr graph_energy(const ExactSpectrum& spec);
double graph_energy(const NumericSpectrum& spec);
// Sum of mult * |beta - 2m/n| over the spectrum.
SurdExpr laplacian_energy(const ExactSpectrum& spec, long n, long m);
double laplacian_energy(const NumericSpectrum& spec, long n, long m);
SurdExpr signless_laplacian_energy(const ExactSpectrum& spec, long n, long m);
double signless_laplacian_energy(const NumericSpectrum& spec, long n, long m);

enum class Relation { Less, Equal, Greater };
const char* relation_symbol(Relation r);

// Compares exactly when both sides are exact; otherwise within a relative tolerance.
struct Comparison {
  Relation rel = Relation::Equal;
  bool exact = false;
};
Comparison compare_energies(const EnergyValue& x, const EnergyValue& y, double tol);

struct EnergyFlags {
  bool hypoenergetic = false;
  bool hyperenergetic = false;
  bool l_hyper = false;
  bool q_hyper = false;
  friend bool operator==(const EnergyFlags&, const EnergyFlags&) = default;
};

struct EnergyOrdering {
  Comparison e_vs_leplus;
  Comparison leplus_vs_le;
  Comparison e_vs_le;
  bool all_equal() const;
  bool strict_increasing() const;  // E < LE+ < LE
  bool exact() const { return e_vs_leplus.exact && leplus_vs_le.exact && e_vs_le.exact; }
  // e.g. "E < LE+ < LE", "E = LE+ = LE", with " (approx)" on the float path.
  std::string str() const;
};

struct EnergyReport {
  long n_vertices = 0;
  long n_edges = 0;
  Rational mean_degree{0};
  EnergyValue E, LE, LEplus;
  EnergyFlags flags;
  EnergyOrdering ordering;
};

// Flags against the complete-graph reference 2(n-1); exact when the
// energies are exact, else with tolerance tol.
EnergyFlags classify(const EnergyReport& report, double tol = 1e-9);
EnergyOrdering energy_ordering(const EnergyReport& report, double tol = 1e-9);

// Fills energies, flags and ordering from whichever spectra are given;
// the exact spectrum wins when both are present.
EnergyReport energy_report(long n, long m, const std::optional<ExactSpectrum>& a_exact,
                           const std::optional<ExactSpectrum>& l_exact, const std::optional<ExactSpectrum>& q_exact,
                           const std::optional<NumericSpectrum>& a_num, const std::optional<NumericSpectrum>& l_num,
                           const std::optional<NumericSpectrum>& q_num, double tol = 1e-9);

}  // namespace ncg
