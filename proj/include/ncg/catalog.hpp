#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/closed_forms.hpp"
#include "ncg/integrality.hpp"

namespace ncg {

// One closed-form theorem: its id, the family it covers and the parameter
// names accepted on the command line, in FamilyFormula order.
struct TheoremInfo {
  std::string id;
  FormulaFamily family;
  std::vector<std::string> param_names;
  std::string summary;
  std::vector<FamilyFormula> desk_suite;  // default parameter tuples
};

const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo* find_theorem(const std::string& id);

// What the comparison theorems assert for a family member.
enum class OrderingClaim { None, AllEqual, StrictIncreasing };
struct FamilyClaims {
  OrderingClaim ordering = OrderingClaim::None;
  std::optional<bool> hypo, hyper, l_hyper, q_hyper;
};
FamilyClaims family_claims(const FamilyFormula& f);

struct ClaimedFlags {
  bool hypo = false;
  bool hyper = false;
  bool l_hyper = false;
  bool q_hyper = false;
  bool q_integral = false;
};

struct ClassifiedGroup {
  std::string name;  // display name, e.g. "Z2 x D8"
  std::string spec;  // group spec text
  ClaimedFlags claimed;
};

// The 17 groups with planar commuting graph and the flags claimed for them.
const std::vector<ClassifiedGroup>& planar_commuting_groups();
// The 7 groups with toroidal commuting graph.
const std::vector<ClassifiedGroup>& toroidal_commuting_groups();

enum class Quantity { E, LE, LEplus };
const char* quantity_name(Quantity q);

// A published value for one energy of one group.
struct StatedValue {
  std::string label;
  std::string spec;
  Quantity quantity;
  std::string stated;  // verbatim text, e.g. "292/20 + 4*sqrt(37)"
  SurdExpr value;
};
const std::vector<StatedValue>& stated_values();

// A published Q-spectrum as (value, multiplicity) pairs.
struct StatedSpectrum {
  std::string label;
  std::string spec;
  std::vector<std::pair<SurdValue, long>> entries;
};
const std::vector<StatedSpectrum>& stated_spectra();

struct TableRow {
  long n;
  long root;
};
// Published perfect-square rows for K1, K2, K3 (empty for K4).
const std::vector<TableRow>& table1(SquareKind kind);

}  // namespace ncg
