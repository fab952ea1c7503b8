#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

struct ParameterOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAFrobeniusPair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OrderCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr long kOrderCap = 10000;

enum class Family {
  Dihedral,       // D_{2m}: m
  Quasidihedral,  // QD_{2^n}: n
  M2rs,           // M_{2rs}: r, s
  Dicyclic,       // Q_{4n}: n
  U6n,            // U_{6n}: n
  SD8n,           // SD_{8n}: n
  V8n,            // V_{8n}: n
  Frobenius,      // F_{p,q}: p, q
  HanakiV,        // A(n, V): n
  HanakiP,        // A(n, p): n, p
  Symmetric,      // S_k: k
  Alternating,    // A_k: k
  SL2_3,
  Cyclic,         // Z_k: k
  Modular16,      // <a,b | a^8 = b^2 = 1, bab^-1 = a^5>
  Pauli,          // D_8 * Z_4 (central product)
  SmallGroup16_3, // (Z_4 x Z_2) : Z_2
  DirectProduct,
};

struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<long> params;
  std::shared_ptr<const GroupSpec> left, right;  // DirectProduct only

  static GroupSpec dihedral(long m) { return {Family::Dihedral, {m}, {}, {}}; }
  static GroupSpec quasidihedral(long n) { return {Family::Quasidihedral, {n}, {}, {}}; }
  static GroupSpec m2rs(long r, long s) { return {Family::M2rs, {r, s}, {}, {}}; }
  static GroupSpec dicyclic(long n) { return {Family::Dicyclic, {n}, {}, {}}; }
  static GroupSpec u6n(long n) { return {Family::U6n, {n}, {}, {}}; }
  static GroupSpec sd8n(long n) { return {Family::SD8n, {n}, {}, {}}; }
  static GroupSpec v8n(long n) { return {Family::V8n, {n}, {}, {}}; }
  static GroupSpec frobenius(long p, long q) { return {Family::Frobenius, {p, q}, {}, {}}; }
  static GroupSpec hanaki_v(long n) { return {Family::HanakiV, {n}, {}, {}}; }
  static GroupSpec hanaki_p(long n, long p) { return {Family::HanakiP, {n, p}, {}, {}}; }
  static GroupSpec symmetric(long k) { return {Family::Symmetric, {k}, {}, {}}; }
  static GroupSpec alternating(long k) { return {Family::Alternating, {k}, {}, {}}; }
  static GroupSpec sl2_3() { return {Family::SL2_3, {}, {}, {}}; }
  static GroupSpec cyclic(long k) { return {Family::Cyclic, {k}, {}, {}}; }
  static GroupSpec modular16() { return {Family::Modular16, {}, {}, {}}; }
  static GroupSpec pauli() { return {Family::Pauli, {}, {}, {}}; }
  static GroupSpec small_group_16_3() { return {Family::SmallGroup16_3, {}, {}, {}}; }
  static GroupSpec product(const GroupSpec& a, const GroupSpec& b);

  // Canonical text form in the CLI grammar, e.g. "D:2m=12", "prod(A4,Z:2)".
  std::string str() const;
  // Order from the family formula, without building the table.
  long expected_order() const;
};

// Parses the compact grammar: D:2m=12, D:m=6, QD:2^4, M:r=5,s=2, Q:4n=16,
// U:6n=18, SD:8n=24, V:8n=16, F:p=7,q=3, HV:n=2, HP:n=1,p=3, S4, A5, S:k=5,
// A:k=6, SL23, Sz2, Z:4, Z4, M16, D8*Z4, SG16_3, prod(X,Y).
GroupSpec parse_group_spec(const std::string& text);

class GroupTable {
 public:
  GroupTable() = default;
  // mul_fn(i, j) gives the index of element i * element j.
  template <class MulFn>
  static GroupTable from_rule(long order, MulFn mul_fn, std::vector<std::string> labels);

  long order() const { return order_; }
  int mul(long x, long y) const { return table_[static_cast<std::size_t>(x * order_ + y)]; }
  long identity() const { return identity_; }
  long inv(long x) const { return inv_[static_cast<std::size_t>(x)]; }
  const std::string& label(long x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool commute(long x, long y) const { return mul(x, y) == mul(y, x); }

  bool is_latin_square() const;
  bool is_associative() const;

 private:
  void finish();
  long order_ = 0;
  std::vector<std::uint16_t> table_;
  long identity_ = 0;
  std::vector<long> inv_;
  std::vector<std::string> labels_;
};

struct CenterInfo {
  std::vector<long> elements;
  long size = 0;
};

GroupTable build_group(const GroupSpec& spec);
CenterInfo center(const GroupTable& g);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

enum class NamedGroup { S4, A4, A5, SL2_3 };
GroupTable build_permutation_matrix_groups(NamedGroup which);

// Integer helpers shared with the formula modules.
bool is_prime(long p);
long least_primitive_root(long p);
long pow_mod(long base, long e, long mod);

template <class MulFn>
GroupTable GroupTable::from_rule(long order, MulFn mul_fn, std::vector<std::string> labels) {
  if (order > kOrderCap) throw OrderCapExceeded("group order " + std::to_string(order) + " exceeds cap");
  GroupTable g;
  g.order_ = order;
  g.table_.resize(static_cast<std::size_t>(order * order));
  for (long i = 0; i < order; ++i)
    for (long j = 0; j < order; ++j)
      g.table_[static_cast<std::size_t>(i * order + j)] = static_cast<std::uint16_t>(mul_fn(i, j));
  g.labels_ = std::move(labels);
  g.finish();
  return g;
}

}  // namespace ncg
