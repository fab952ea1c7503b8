#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/energies.hpp"
#include "ncg/groups.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/spectra.hpp"

namespace ncg {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string lhs;
  std::string rhs;
  double delta = 0.0;
};

struct AnalyzeOptions {
  double tol = 1e-9;
  // Numeric spectra are computed up to this many vertices, and always when
  // no exact spectrum is available.
  long numeric_cap = 300;
  // Exact characteristic polynomials for non-multipartite graphs up to this size.
  long charpoly_cap = 100;
};

struct Analysis {
  std::string spec;  // group spec text; empty for bare graphs
  long group_order = 0;
  long center_size = 0;
  std::optional<MultipartiteShape> shape;
  std::string exact_source;  // "multipartite", "charpoly" or "none"
  std::optional<ExactSpectrum> a_exact, l_exact, q_exact;
  std::optional<NumericSpectrum> a_num, l_num, q_num;
  EnergyReport energies;
  bool q_integral = false;
  bool q_integral_exact = false;
  std::vector<CheckResult> checks;  // trace identities and exact/numeric agreement

  bool checks_pass() const;
};

Analysis analyze_graph(const NCGraph& graph, const AnalyzeOptions& opts = {});
Analysis analyze_group(const GroupSpec& spec, const AnalyzeOptions& opts = {});

}  // namespace ncg
