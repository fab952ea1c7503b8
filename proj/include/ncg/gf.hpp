#pragma once

#include <stdexcept>
#include <vector>

#include "ncg/groups.hpp"

namespace ncg {

struct FrobeniusRequiresChar2 : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// GF(p^n) as GF(p)[x] / (modulus).
struct FieldSpec {
  long p = 2;
  long n = 1;
  std::vector<long> modulus;  // monic, degree n, low to high
  long size() const;
};

struct FieldElem {
  std::vector<long> coeffs;  // length n, entries in [0, p)
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

// Field with the least monic irreducible modulus, ordering candidates by
// their base-p encoding (so x^3+x+1 precedes x^3+x^2+1).
FieldSpec make_field(long p, long n);
bool is_irreducible(long p, const std::vector<long>& poly);

FieldElem ff_zero(const FieldSpec& f);
FieldElem ff_one(const FieldSpec& f);
// Element whose coefficient vector is the base-p digits of idx.
FieldElem ff_from_index(const FieldSpec& f, long idx);
long ff_index(const FieldSpec& f, const FieldElem& x);

FieldElem ff_add(const FieldSpec& f, const FieldElem& x, const FieldElem& y);
FieldElem ff_mul(const FieldSpec& f, const FieldElem& x, const FieldElem& y);
FieldElem frobenius(const FieldSpec& f, const FieldElem& x);

struct HanakiSpec {
  bool char2 = true;  // A(n, V) when true, A(n, p) otherwise
  long n = 2;
  long p = 2;
  static HanakiSpec anv(long n) { return {true, n, 2}; }
  static HanakiSpec anp(long n, long p) { return {false, n, p}; }
};

// A(n, V): pairs U(a, b) with U(a,b)U(a',b') = U(a+a', b+b'+a'V(a)).
// A(n, p): triples V(a,b,c) with V(a,b,c)V(a',b',c') = V(a+a', b+b'+ca', c+c').
GroupTable build_hanaki(const HanakiSpec& which);

}  // namespace ncg
