#include "ncg/catalog.hpp"

namespace ncg {

namespace {

using F = FamilyFormula;

SurdExpr val(long num, long den = 1, long coef_num = 0, long coef_den = 1, long radicand = 0) {
  SurdExpr e(make_rational(num, den));
  if (coef_num != 0) e += SurdExpr::sqrt_of(BigInt(radicand), make_rational(coef_num, coef_den));
  return e;
}

SurdValue sv(long num, long den = 1, long coef_num = 0, long coef_den = 1, long radicand = 0) {
  return SurdValue::make(make_rational(num, den), make_rational(coef_num, coef_den), BigInt(radicand));
}

std::vector<TheoremInfo> build_catalog() {
  std::vector<TheoremInfo> c;
  c.push_back({"Dihedral1", FormulaFamily::Dihedral, {"m"}, "D_2m, m odd",
               {F::dihedral(3), F::dihedral(5), F::dihedral(7), F::dihedral(9), F::dihedral(11), F::dihedral(21)}});
  c.push_back({"Dihedral2", FormulaFamily::Dihedral, {"m"}, "D_2m, m even",
               {F::dihedral(4), F::dihedral(6), F::dihedral(8), F::dihedral(10), F::dihedral(12)}});
  c.push_back({"Quasidihedral", FormulaFamily::Quasidihedral, {"n"}, "QD_2^n, n >= 4",
               {F::quasidihedral(4), F::quasidihedral(5), F::quasidihedral(6), F::quasidihedral(7)}});
  c.push_back({"M_2rs1", FormulaFamily::M2rs, {"r", "s"}, "M_2rs, r odd",
               {F::m2rs(3, 1), F::m2rs(3, 2), F::m2rs(5, 2), F::m2rs(7, 3), F::m2rs(9, 2)}});
  c.push_back({"M_2rs2", FormulaFamily::M2rs, {"r", "s"}, "M_2rs, r even",
               {F::m2rs(4, 1), F::m2rs(4, 2), F::m2rs(6, 2), F::m2rs(8, 3), F::m2rs(10, 2)}});
  c.push_back({"Quarternion", FormulaFamily::Dicyclic, {"n"}, "dicyclic Q_4n",
               {F::dicyclic(2), F::dicyclic(3), F::dicyclic(4), F::dicyclic(5), F::dicyclic(6)}});
  c.push_back({"U6n", FormulaFamily::U6n, {"n"}, "U_6n = <x, y | x^2n = y^3 = 1, x^-1 y x = y^-1>",
               {F::u6n(1), F::u6n(2), F::u6n(3), F::u6n(5)}});
  c.push_back({"D2m", FormulaFamily::QuotientDihedral, {"m", "z"}, "G/Z(G) = D_2m, |Z(G)| = z",
               {F::quotient_dihedral(3, 1), F::quotient_dihedral(3, 2), F::quotient_dihedral(5, 3),
                F::quotient_dihedral(4, 2), F::quotient_dihedral(4, 4), F::quotient_dihedral(6, 2),
                F::quotient_dihedral(7, 2)}});
  c.push_back({"Z_p*Z_p", FormulaFamily::QuotientZpZp, {"p", "z"}, "G/Z(G) = Z_p x Z_p, |Z(G)| = z",
               {F::quotient_zpzp(2, 2), F::quotient_zpzp(2, 4), F::quotient_zpzp(3, 3), F::quotient_zpzp(5, 5),
                F::quotient_zpzp(3, 6)}});
  c.push_back({"Suzuki", FormulaFamily::QuotientSz2, {"z"}, "G/Z(G) = Sz(2), |Z(G)| = z",
               {F::quotient_sz2(1), F::quotient_sz2(2), F::quotient_sz2(3)}});
  c.push_back({"Hanaki1", FormulaFamily::HanakiV, {"n"}, "Hanaki group A(n, V)",
               {F::hanaki_v(2), F::hanaki_v(3), F::hanaki_v(4)}});
  c.push_back({"Hanaki2", FormulaFamily::HanakiP, {"n", "p"}, "Hanaki group A(n, p)",
               {F::hanaki_p(1, 3), F::hanaki_p(1, 5), F::hanaki_p(1, 7)}});
  c.push_back({"SD_8n1", FormulaFamily::SD8n, {"n"}, "SD_8n, n odd", {F::sd8n(3), F::sd8n(5), F::sd8n(7)}});
  c.push_back({"SD_8n2", FormulaFamily::SD8n, {"n"}, "SD_8n, n even", {F::sd8n(2), F::sd8n(4), F::sd8n(6)}});
  c.push_back({"V8n1", FormulaFamily::V8n, {"n"}, "V_8n, n odd", {F::v8n(3), F::v8n(5), F::v8n(7)}});
  c.push_back({"V8n2", FormulaFamily::V8n, {"n"}, "V_8n, n even", {F::v8n(2), F::v8n(4), F::v8n(6)}});
  c.push_back({"pq1", FormulaFamily::Frobenius, {"p", "q"}, "Frobenius group F_p,q",
               {F::frobenius(3, 2), F::frobenius(5, 2), F::frobenius(5, 4), F::frobenius(7, 2), F::frobenius(7, 3),
                F::frobenius(11, 5), F::frobenius(13, 3)}});
  return c;
}

ClaimedFlags flags(bool q_integral, bool hyper, bool l_hyper, bool q_hyper) {
  ClaimedFlags f;
  f.hypo = false;
  f.hyper = hyper;
  f.l_hyper = l_hyper;
  f.q_hyper = q_hyper;
  f.q_integral = q_integral;
  return f;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> catalog = build_catalog();
  return catalog;
}

const TheoremInfo* find_theorem(const std::string& id) {
  for (const auto& t : theorem_catalog())
    if (t.id == id) return &t;
  return nullptr;
}

FamilyClaims family_claims(const FamilyFormula& f) {
  check_range(f);
  FamilyClaims c;
  const long a = f.params[0];
  auto both = [&](bool l, bool q) {
    c.hypo = false;
    c.hyper = false;
    c.l_hyper = l;
    c.q_hyper = q;
  };
  switch (f.family) {
    case FormulaFamily::Dihedral:
      c.ordering = a == 4 ? OrderingClaim::AllEqual : OrderingClaim::StrictIncreasing;
      both(a != 4, a != 3 && a != 4);
      break;
    case FormulaFamily::Quasidihedral:
    case FormulaFamily::SD8n:
      c.ordering = OrderingClaim::StrictIncreasing;
      both(true, true);
      break;
    case FormulaFamily::M2rs: {
      const bool m6 = a == 3 && f.params[1] == 1;
      c.ordering = a == 4 ? OrderingClaim::AllEqual : OrderingClaim::StrictIncreasing;
      both(a != 4, !m6 && a != 4);
      break;
    }
    case FormulaFamily::Dicyclic:
      c.ordering = a == 2 ? OrderingClaim::AllEqual : OrderingClaim::StrictIncreasing;
      both(a != 2, a != 2);
      break;
    case FormulaFamily::U6n:
      c.ordering = OrderingClaim::StrictIncreasing;
      both(true, true);
      break;
    case FormulaFamily::QuotientDihedral: {
      const bool d6 = a == 3 && f.params[1] == 1;
      c.ordering = OrderingClaim::StrictIncreasing;
      both(true, !d6);
      break;
    }
    case FormulaFamily::QuotientZpZp:
    case FormulaFamily::HanakiV:
    case FormulaFamily::HanakiP:
      c.ordering = OrderingClaim::AllEqual;
      both(false, false);
      break;
    case FormulaFamily::QuotientSz2:
      c.ordering = OrderingClaim::StrictIncreasing;
      both(true, a != 1);
      break;
    case FormulaFamily::V8n:
      c.ordering = a == 2 ? OrderingClaim::AllEqual : OrderingClaim::StrictIncreasing;
      both(a != 2, a != 2);
      break;
    case FormulaFamily::Frobenius: break;
  }
  return c;
}

const std::vector<ClassifiedGroup>& planar_commuting_groups() {
  static const std::vector<ClassifiedGroup> groups = {
      {"D6", "D:2m=6", flags(false, false, true, false)},
      {"D8", "D:2m=8", flags(true, false, false, false)},
      {"D10", "D:2m=10", flags(false, false, true, true)},
      {"D12", "D:2m=12", flags(false, false, true, true)},
      {"Q8", "Q:4n=8", flags(true, false, false, false)},
      {"Q12", "Q:4n=12", flags(false, false, true, true)},
      {"Z2 x D8", "prod(Z:2,D:2m=8)", flags(true, false, false, false)},
      {"Z2 x Q8", "prod(Z:2,Q:4n=8)", flags(true, false, false, false)},
      {"M16", "M16", flags(true, false, false, false)},
      {"Z4 : Z4", "M:r=4,s=2", flags(true, false, false, false)},
      {"D8 * Z4", "D8*Z4", flags(true, false, false, false)},
      {"SG(16,3)", "SG16_3", flags(true, false, false, false)},
      {"A4", "A4", flags(false, false, true, true)},
      {"A5", "A5", flags(false, false, true, true)},
      {"S4", "S4", flags(false, true, true, true)},
      {"SL(2,3)", "SL23", flags(false, false, true, true)},
      {"Sz(2)", "Sz2", flags(false, false, true, false)},
  };
  return groups;
}

const std::vector<ClassifiedGroup>& toroidal_commuting_groups() {
  static const std::vector<ClassifiedGroup> groups = {
      {"D14", "D:2m=14", flags(true, false, true, true)},
      {"D16", "D:2m=16", flags(false, false, true, true)},
      {"Q16", "Q:4n=16", flags(false, false, true, true)},
      {"QD16", "QD:2^4", flags(false, false, true, true)},
      {"Z7 : Z3", "F:p=7,q=3", flags(false, false, true, true)},
      {"D6 x Z3", "prod(D:2m=6,Z:3)", flags(false, false, true, true)},
      {"A4 x Z2", "prod(A4,Z:2)", flags(true, false, true, true)},
  };
  return groups;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::E: return "E";
    case Quantity::LE: return "LE";
    case Quantity::LEplus: return "LE+";
  }
  return "?";
}

const std::vector<StatedValue>& stated_values() {
  static const std::vector<StatedValue> values = {
      {"D6", "D:2m=6", Quantity::E, "2 + 2*sqrt(7)", val(2, 1, 2, 1, 7)},
      {"D6", "D:2m=6", Quantity::LE, "42/5", val(42, 5)},
      {"D6", "D:2m=6", Quantity::LEplus, "9/5 + sqrt(33)", val(9, 5, 1, 1, 33)},
      {"D8", "D:2m=8", Quantity::LE, "8", val(8)},
      {"QD16", "QD:2^4", Quantity::E, "6 + 2*sqrt(57)", val(6, 1, 2, 1, 57)},
      {"QD16", "QD:2^4", Quantity::LE, "304/7", val(304, 7)},
      {"QD16", "QD:2^4", Quantity::LEplus, "134/7 + 2*sqrt(73)", val(134, 7, 2, 1, 73)},
      {"SD24", "SD:8n=24", Quantity::E, "8 + 8*sqrt(7)", val(8, 1, 8, 1, 7)},
      {"SD24", "SD:8n=24", Quantity::LE, "312/5", val(312, 5)},
      {"SD24", "SD:8n=24", Quantity::LEplus, "36 + 4*sqrt(33)", val(36, 1, 4, 1, 33)},
      {"A4", "A4", Quantity::E, "6 + 2*sqrt(33)", val(6, 1, 2, 1, 33)},
      {"A4", "A4", Quantity::LE, "224/11", val(224, 11)},
      {"A4", "A4", Quantity::LEplus, "85/11 + sqrt(145)", val(85, 11, 1, 1, 145)},
      {"A5", "A5", Quantity::LE, "8580/59", val(8580, 59)},
      {"S4", "S4", Quantity::LE, "1072/23 + 4*sqrt(13)", val(1072, 23, 4, 1, 13)},
      {"S4", "S4", Quantity::LEplus, "4836/23", val(4836, 23)},
      {"SL(2,3)", "SL23", Quantity::E, "16 + 8*sqrt(7)", val(16, 1, 8, 1, 7)},
      {"SL(2,3)", "SL23", Quantity::LE, "552/11", val(552, 11)},
      {"SL(2,3)", "SL23", Quantity::LEplus, "282/11 + sqrt(420)", val(282, 11, 1, 1, 420)},
      {"Sz(2)", "Sz2", Quantity::E, "4*(3 + 2*sqrt(6))", val(12, 1, 8, 1, 6)},
      {"Sz(2)", "Sz2", Quantity::LE, "690/19", val(690, 19)},
      {"Z7 : Z3", "F:p=7,q=3", Quantity::E, "12 + 4*sqrt(30)", val(12, 1, 4, 1, 30)},
      {"Z7 : Z3", "F:p=7,q=3", Quantity::LE, "308/5", val(308, 5)},
      {"Z7 : Z3", "F:p=7,q=3", Quantity::LEplus, "292/20 + 4*sqrt(37)", val(292, 20, 4, 1, 37)},
      {"D6 x Z3", "prod(D:2m=6,Z:3)", Quantity::E, "6 + 6*sqrt(7)", val(6, 1, 6, 1, 7)},
      {"D6 x Z3", "prod(D:2m=6,Z:3)", Quantity::LE, "594/15", val(594, 15)},
      {"D6 x Z3", "prod(D:2m=6,Z:3)", Quantity::LEplus, "99/5 + 3*sqrt(33)", val(99, 5, 3, 1, 33)},
      {"A4 x Z2", "prod(A4,Z:2)", Quantity::E, "12 + 4*sqrt(33)", val(12, 1, 4, 1, 33)},
      {"A4 x Z2", "prod(A4,Z:2)", Quantity::LE, "544/11", val(544, 11)},
      {"A4 x Z2", "prod(A4,Z:2)", Quantity::LEplus, "552/11", val(552, 11)},
  };
  return values;
}

const std::vector<StatedSpectrum>& stated_spectra() {
  static const std::vector<StatedSpectrum> spectra = {
      {"A4", "A4", {{sv(9), 4}, {sv(8), 2}, {sv(7), 3}, {sv(23, 2, 1, 2, 145), 1}, {sv(23, 2, -1, 2, 145), 1}}},
      {"SL(2,3)",
       "SL23",
       {{sv(20), 3}, {sv(18), 14}, {sv(14), 3}, {sv(27, 1, 1, 2, 420), 1}, {sv(27, 1, -1, 2, 420), 1}}},
      // Printed with the A - D sign convention.
      {"S4",
       "S4",
       {{sv(0), 1}, {sv(-20), 4}, {sv(-21), 7}, {sv(-23), 7}, {sv(-20, 1, 1, 1, 6), 2}, {sv(-20, 1, -1, 1, 6), 2}}},
      {"Z7 : Z3",
       "F:p=7,q=3",
       {{sv(14), 5}, {sv(18), 7}, {sv(16), 6}, {sv(22, 1, 2, 1, 37), 1}, {sv(22, 1, -2, 1, 37), 1}}},
      {"D6 x Z3",
       "prod(D:2m=6,Z:3)",
       {{sv(12), 6}, {sv(9), 7}, {sv(27, 2, 1, 2, 297), 1}, {sv(27, 2, -1, 2, 297), 1}}},
      {"A4 x Z2", "prod(A4,Z:2)", {{sv(18), 12}, {sv(16), 5}, {sv(14), 3}, {sv(36), 1}, {sv(10), 1}}},
  };
  return spectra;
}

const std::vector<TableRow>& table1(SquareKind kind) {
  static const std::vector<TableRow> k1 = {
      {1, 1},           {2, 3},           {7, 17},           {36, 99},           {205, 577},
      {1190, 3363},     {6931, 19601},    {40392, 114243},   {235417, 665857},   {1372106, 3880899},
      {7997215, 22619537}, {46611180, 131836323}, {271669861, 768398401}};
  static const std::vector<TableRow> k2 = {
      {2, 1},           {4, 3},            {14, 17},          {72, 99},           {410, 577},
      {2380, 3363},     {13862, 19601},    {80784, 114243},   {470834, 665857},   {2744212, 3880899},
      {15994430, 22619537}, {93222360, 131836323}, {543339722, 768398401}};
  static const std::vector<TableRow> k3 = {{1, 3},           {18, 99},          {595, 3363},
                                           {20196, 114243}, {686053, 3880899}, {23305590, 131836323}};
  static const std::vector<TableRow> none;
  switch (kind) {
    case SquareKind::K1: return k1;
    case SquareKind::K2: return k2;
    case SquareKind::K3: return k3;
    case SquareKind::K4: return none;
  }
  return none;
}

}  // namespace ncg
