#pragma once

#include <string>
#include <vector>

#include "ncg/analysis.hpp"
#include "ncg/catalog.hpp"
#include "ncg/closed_forms.hpp"
#include "ncg/integrality.hpp"

namespace ncg {

// Discrepancy: a published claim is contradicted by a brute-force result
// that is itself consistent (exact and numeric paths agree).
enum class Status { Pass, Fail, Discrepancy, Skip };
const char* status_name(Status s);

struct VerifyCheck {
  std::string name;
  Status status = Status::Pass;
  std::string lhs;  // claimed or closed-form side
  std::string rhs;  // brute-force side
  double delta = 0.0;
  std::string note;
};

struct VerifyOutcome {
  std::string theorem;  // theorem id, or a suite name such as "com"
  std::string params;   // parameter tuple or group label
  std::vector<VerifyCheck> checks;
  // Worst status: Fail over Discrepancy over Pass; Skip only when nothing ran.
  Status overall() const;
};

struct VerifyOptions {
  double tol = 1e-9;
  int threads = 1;
  // Jacobi cross-checks run up to this many vertices.
  long numeric_cap = 600;
};

VerifyOutcome verify_formula(const FamilyFormula& f, const VerifyOptions& opts = {});
// Runs the tuples concurrently; results come back in input order.
std::vector<VerifyOutcome> verify_formulas(const std::vector<FamilyFormula>& fs, const VerifyOptions& opts = {});

// Flags and Q-integrality of each listed group against the claimed values.
std::vector<VerifyOutcome> verify_planar(const VerifyOptions& opts = {});
std::vector<VerifyOutcome> verify_toroidal(const VerifyOptions& opts = {});
VerifyOutcome verify_classified(const std::string& suite, const ClassifiedGroup& g, const VerifyOptions& opts = {});

std::vector<VerifyOutcome> verify_stated_values(const VerifyOptions& opts = {});
std::vector<VerifyOutcome> verify_stated_spectra(const VerifyOptions& opts = {});

// square_sequence against the published rows with n <= bound.
VerifyOutcome verify_table1(SquareKind kind, long bound, int threads = 1);

// The printed Frobenius LE+ formula against brute force for every prime
// pair with q | p-1 and pq <= max_pq, followed by the F_{7,3} adjudication.
std::vector<VerifyOutcome> verify_frobenius_sweep(long max_pq = 500, const VerifyOptions& opts = {});

// Desk suites of every catalog theorem, then com, toroidal, stated values,
// stated spectra, Table 1 and the Frobenius sweep.
std::vector<VerifyOutcome> verify_all(bool small, const VerifyOptions& opts = {});

// One analysis per tuple, in input order. By default the graph is the
// complete multipartite graph of the closed-form shape; with brute set the
// witness group is built. Tuples without a witness are dropped when brute.
std::vector<std::pair<FamilyFormula, Analysis>> sweep_formulas(const std::vector<FamilyFormula>& fs, bool brute,
                                                               const VerifyOptions& opts = {});
// "m=5" or "r=5 s=2", using the catalog's parameter names.
std::string param_text(const FamilyFormula& f);

struct VerifySummary {
  long pass = 0, fail = 0, discrepancy = 0, skip = 0;
  std::string str() const;  // e.g. "12 pass, 0 fail, 3 discrepancy, 0 skip"
};
VerifySummary summarize(const std::vector<VerifyOutcome>& outcomes);
// 0 when nothing failed; 1 on any failure, or on any discrepancy when strict.
int verify_exit_code(const VerifySummary& s, bool strict);

}  // namespace ncg
