#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/groups.hpp"
#include "ncg/integrality.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/spectra.hpp"
#include "ncg/surd.hpp"

namespace ncg {

struct ParameterOutOfTheoremRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoWitness : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Families with closed-form spectra. Quotient families are classes of groups
// G with G/Z(G) of a fixed type and |Z(G)| = z.
enum class FormulaFamily {
  Dihedral,          // m
  Quasidihedral,     // n (order 2^n)
  M2rs,              // r, s
  Dicyclic,          // n (order 4n)
  U6n,               // n
  QuotientDihedral,  // m, z: G/Z = D_{2m}
  QuotientZpZp,      // p, z: G/Z = Z_p x Z_p
  QuotientSz2,       // z: G/Z = Sz(2)
  HanakiV,           // n
  HanakiP,           // n, p
  SD8n,              // n
  V8n,               // n
  Frobenius,         // p, q
};

struct FamilyFormula {
  FormulaFamily family = FormulaFamily::Dihedral;
  std::vector<long> params;

  static FamilyFormula dihedral(long m) { return {FormulaFamily::Dihedral, {m}}; }
  static FamilyFormula quasidihedral(long n) { return {FormulaFamily::Quasidihedral, {n}}; }
  static FamilyFormula m2rs(long r, long s) { return {FormulaFamily::M2rs, {r, s}}; }
  static FamilyFormula dicyclic(long n) { return {FormulaFamily::Dicyclic, {n}}; }
  static FamilyFormula u6n(long n) { return {FormulaFamily::U6n, {n}}; }
  static FamilyFormula quotient_dihedral(long m, long z) { return {FormulaFamily::QuotientDihedral, {m, z}}; }
  static FamilyFormula quotient_zpzp(long p, long z) { return {FormulaFamily::QuotientZpZp, {p, z}}; }
  static FamilyFormula quotient_sz2(long z) { return {FormulaFamily::QuotientSz2, {z}}; }
  static FamilyFormula hanaki_v(long n) { return {FormulaFamily::HanakiV, {n}}; }
  static FamilyFormula hanaki_p(long n, long p) { return {FormulaFamily::HanakiP, {n, p}}; }
  static FamilyFormula sd8n(long n) { return {FormulaFamily::SD8n, {n}}; }
  static FamilyFormula v8n(long n) { return {FormulaFamily::V8n, {n}}; }
  static FamilyFormula frobenius(long p, long q) { return {FormulaFamily::Frobenius, {p, q}}; }

  std::string str() const;  // e.g. "M2rs(r=5,s=2)"
};

// Throws ParameterOutOfTheoremRange when the parameters fall outside every
// theorem for the family.
void check_range(const FamilyFormula& f);

// Catalog id of the theorem covering f, e.g. "Dihedral1" for odd m.
std::string theorem_id(const FamilyFormula& f);

ExactSpectrum closed_qspec(const FamilyFormula& f);
MultipartiteShape expected_shape(const FamilyFormula& f);

struct ClosedEnergies {
  SurdExpr E, LE, LEplus;
};
ClosedEnergies closed_energies(const FamilyFormula& f);

struct ClosedFormReport {
  ExactSpectrum qspec;
  std::optional<ExactSpectrum> lspec;
  std::optional<ExactSpectrum> aspec;
  SurdExpr E, LE, LEplus;
};
ClosedFormReport closed_form_report(const FamilyFormula& f);

// A concrete group in the class described by f. Dihedral quotients use
// D_{2m} x Z_z (m odd) or D_{4m} x Z_{z/2} (m even, z even); Z_p x Z_p
// quotients use A(1,p) x Z_{z/p}; Sz(2) quotients use F_{5,4} x Z_z.
// Throws NoWitness when none of these fits.
GroupSpec witness_spec(const FamilyFormula& f);
long expected_center_size(const FamilyFormula& f);

// Discriminant kind whose perfect-square values make the quadratic factor
// of closed_qspec rational, with the argument to evaluate it at. Absent for
// families whose spectra are always or never integral.
struct DiscriminantLink {
  SquareKind kind;
  long argument;
};
std::optional<DiscriminantLink> discriminant_link(const FamilyFormula& f);

}  // namespace ncg
