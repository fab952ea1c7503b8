#include "ncg/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "ncg/gf.hpp"

namespace ncg {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long pow_mod(long base, long e, long mod) {
  long r = 1 % mod, b = ((base % mod) + mod) % mod;
  while (e > 0) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return r;
}

long least_primitive_root(long p) {
  if (!is_prime(p)) throw ParameterOutOfRange("primitive root needs a prime modulus");
  if (p == 2) return 1;
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long f : factors) ok = ok && pow_mod(g, (p - 1) / f, p) != 1;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

GroupSpec GroupSpec::product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec s;
  s.family = Family::DirectProduct;
  s.left = std::make_shared<const GroupSpec>(a);
  s.right = std::make_shared<const GroupSpec>(b);
  return s;
}

namespace {

long param(const GroupSpec& s, std::size_t i) {
  if (s.params.size() <= i) throw ParameterOutOfRange("missing group parameter");
  return s.params[i];
}

long checked_pow(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > kOrderCap * 64) return kOrderCap * 64;
    r *= b;
  }
  return r;
}

long factorial(long k) {
  long r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

std::string power_label(const char* g, long e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return std::string(g) + "^" + std::to_string(e);
}

std::string word(const std::vector<std::pair<const char*, long>>& parts) {
  std::string s;
  for (const auto& [g, e] : parts) {
    std::string p = power_label(g, e);
    if (p.empty()) continue;
    if (!s.empty()) s += " ";
    s += p;
  }
  return s.empty() ? "1" : s;
}

// Elements a^i b^j (0 <= i < m, 0 <= j < k), index i*k + j, with b^k = a^t
// and b a b^-1 = a^u.
GroupTable metacyclic(long m, long k, long t, long u, const char* ga, const char* gb) {
  u = ((u % m) + m) % m;
  if (pow_mod(u, k, m) != 1 % m || (u * t - t) % m != 0)
    throw std::logic_error("inconsistent metacyclic presentation");
  std::vector<long> upow(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) upow[static_cast<std::size_t>(j)] = pow_mod(u, j, m);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m * k));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < k; ++j) labels.push_back(word({{ga, i}, {gb, j}}));
  return GroupTable::from_rule(
      m * k,
      [&](long x, long y) {
        long i = x / k, j = x % k, i2 = y / k, j2 = y % k;
        long e = i + i2 * upow[static_cast<std::size_t>(j)];
        long s = j + j2;
        if (s >= k) {
          s -= k;
          e += t;
        }
        return (e % m) * k + s;
      },
      std::move(labels));
}

// V_{8n}: a^i b^j with a^{2n} = b^4 = 1, b^2 central, b a b^-1 = a^-1 b^2.
GroupTable build_v8n(long n) {
  const long m = 2 * n;
  std::vector<std::string> labels;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < 4; ++j) labels.push_back(word({{"a", i}, {"b", j}}));
  return GroupTable::from_rule(
      4 * m,
      [&](long x, long y) {
        long i = x / 4, j = x % 4, k = y / 4, l = y % 4;
        if (j % 2 == 0) return ((i + k) % m) * 4 + (j + l) % 4;
        return (((i - k) % m + m) % m) * 4 + (j + l + 2 * k) % 4;
      },
      std::move(labels));
}

GroupTable build_cyclic(long k) {
  std::vector<std::string> labels;
  for (long i = 0; i < k; ++i) labels.push_back(word({{"a", i}}));
  return GroupTable::from_rule(k, [&](long x, long y) { return (x + y) % k; }, std::move(labels));
}

// D_8 * Z_4 realized as the Pauli group: i^k X^a Z^b with ZX = -XZ.
GroupTable build_pauli() {
  std::vector<std::string> labels;
  for (long k = 0; k < 4; ++k)
    for (long a = 0; a < 2; ++a)
      for (long b = 0; b < 2; ++b) labels.push_back(word({{"i", k}, {"X", a}, {"Z", b}}));
  return GroupTable::from_rule(
      16,
      [](long x, long y) {
        long k = x / 4, a = (x / 2) % 2, b = x % 2;
        long k2 = y / 4, a2 = (y / 2) % 2, b2 = y % 2;
        return ((k + k2 + 2 * b * a2) % 4) * 4 + ((a + a2) % 2) * 2 + (b + b2) % 2;
      },
      std::move(labels));
}

// <a,b,c | a^4 = b^2 = c^2 = 1, ab = ba, bc = cb, c a c^-1 = ab>.
GroupTable build_sg16_3() {
  std::vector<std::string> labels;
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 2; ++j)
      for (long k = 0; k < 2; ++k) labels.push_back(word({{"a", i}, {"b", j}, {"c", k}}));
  return GroupTable::from_rule(
      16,
      [](long x, long y) {
        long i = x / 4, j = (x / 2) % 2, k = x % 2;
        long i2 = y / 4, j2 = (y / 2) % 2, k2 = y % 2;
        return ((i + i2) % 4) * 4 + ((j + j2 + k * i2) % 2) * 2 + (k + k2) % 2;
      },
      std::move(labels));
}

std::string cycle_label(const std::vector<int>& perm) {
  std::string s;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

bool is_even(const std::vector<int>& perm) {
  long inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

long perm_code(const std::vector<int>& perm) {
  long code = 0;
  for (int v : perm) code = code * static_cast<long>(perm.size()) + v;
  return code;
}

GroupTable build_permutations(long k, bool alternating) {
  if (k < 1 || k > 8) throw ParameterOutOfRange("permutation groups limited to 1 <= k <= 8");
  long order = factorial(k) / (alternating && k > 1 ? 2 : 1);
  if (order > kOrderCap) throw OrderCapExceeded("permutation group order exceeds cap");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!alternating || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<long, long> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perm_code(perms[i])] = static_cast<long>(i);
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  std::vector<int> tmp(static_cast<std::size_t>(k));
  return GroupTable::from_rule(
      static_cast<long>(perms.size()),
      [&](long x, long y) {
        const auto& s = perms[static_cast<std::size_t>(x)];
        const auto& t = perms[static_cast<std::size_t>(y)];
        // (s * t)(v) = s(t(v))
        for (std::size_t v = 0; v < tmp.size(); ++v) tmp[v] = s[static_cast<std::size_t>(t[v])];
        return index.at(perm_code(tmp));
      },
      std::move(labels));
}

GroupTable build_sl2_3() {
  std::vector<std::array<long, 4>> mats;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c)
        for (long d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  std::map<std::array<long, 4>, long> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    index[mats[i]] = static_cast<long>(i);
    const auto& m = mats[i];
    labels.push_back("[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
                     "," + std::to_string(m[3]) + "]]");
  }
  return GroupTable::from_rule(
      static_cast<long>(mats.size()),
      [&](long x, long y) {
        const auto& p = mats[static_cast<std::size_t>(x)];
        const auto& q = mats[static_cast<std::size_t>(y)];
        std::array<long, 4> r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3,
                              (p[2] * q[0] + p[3] * q[2]) % 3, (p[2] * q[1] + p[3] * q[3]) % 3};
        return index.at(r);
      },
      std::move(labels));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterOutOfRange(msg);
}

}  // namespace

void GroupTable::finish() {
  identity_ = -1;
  for (long e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (long x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::logic_error("table has no identity");
  inv_.assign(static_cast<std::size_t>(order_), -1);
  for (long x = 0; x < order_; ++x)
    for (long y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) {
        inv_[static_cast<std::size_t>(x)] = y;
        break;
      }
  for (long v : inv_)
    if (v < 0) throw std::logic_error("table element without inverse");
  if (labels_.size() != static_cast<std::size_t>(order_)) {
    labels_.clear();
    for (long x = 0; x < order_; ++x) labels_.push_back("g" + std::to_string(x));
  }
}

bool GroupTable::is_latin_square() const {
  std::vector<char> seen(static_cast<std::size_t>(order_));
  for (long x = 0; x < order_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (long y = 0; y < order_; ++y) {
      auto& s = seen[static_cast<std::size_t>(mul(x, y))];
      if (s) return false;
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (long y = 0; y < order_; ++y) {
      auto& s = seen[static_cast<std::size_t>(mul(y, x))];
      if (s) return false;
      s = 1;
    }
  }
  return true;
}

bool GroupTable::is_associative() const {
  for (long x = 0; x < order_; ++x)
    for (long y = 0; y < order_; ++y) {
      long xy = mul(x, y);
      for (long z = 0; z < order_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  return true;
}

CenterInfo center(const GroupTable& g) {
  CenterInfo c;
  for (long x = 0; x < g.order(); ++x) {
    bool central = true;
    for (long y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) c.elements.push_back(x);
  }
  c.size = static_cast<long>(c.elements.size());
  return c;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const long na = a.order(), nb = b.order();
  if (na * nb > kOrderCap) throw OrderCapExceeded("direct product order exceeds cap");
  std::vector<std::string> labels;
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  return GroupTable::from_rule(
      na * nb,
      [&](long x, long y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); },
      std::move(labels));
}

GroupTable build_permutation_matrix_groups(NamedGroup which) {
  switch (which) {
    case NamedGroup::S4: return build_permutations(4, false);
    case NamedGroup::A4: return build_permutations(4, true);
    case NamedGroup::A5: return build_permutations(5, true);
    case NamedGroup::SL2_3: return build_sl2_3();
  }
  throw std::logic_error("unknown named group");
}

long GroupSpec::expected_order() const {
  switch (family) {
    case Family::Dihedral: return 2 * param(*this, 0);
    case Family::Quasidihedral: return checked_pow(2, param(*this, 0));
    case Family::M2rs: return 2 * param(*this, 0) * param(*this, 1);
    case Family::Dicyclic: return 4 * param(*this, 0);
    case Family::U6n: return 6 * param(*this, 0);
    case Family::SD8n:
    case Family::V8n: return 8 * param(*this, 0);
    case Family::Frobenius: return param(*this, 0) * param(*this, 1);
    case Family::HanakiV: return checked_pow(2, 2 * param(*this, 0));
    case Family::HanakiP: return checked_pow(param(*this, 1), 3 * param(*this, 0));
    case Family::Symmetric: return factorial(std::min(param(*this, 0), 12L));
    case Family::Alternating: {
      long k = std::min(param(*this, 0), 12L);
      return k > 1 ? factorial(k) / 2 : 1;
    }
    case Family::SL2_3: return 24;
    case Family::Cyclic: return param(*this, 0);
    case Family::Modular16:
    case Family::Pauli:
    case Family::SmallGroup16_3: return 16;
    case Family::DirectProduct: return left->expected_order() * right->expected_order();
  }
  return 0;
}

GroupTable build_group(const GroupSpec& spec) {
  if (spec.family != Family::DirectProduct && spec.expected_order() > kOrderCap)
    throw OrderCapExceeded("group order " + std::to_string(spec.expected_order()) + " exceeds cap");
  switch (spec.family) {
    case Family::Dihedral: {
      long m = param(spec, 0);
      require(m > 2, "dihedral D_2m requires m > 2");
      return metacyclic(m, 2, 0, -1, "a", "b");
    }
    case Family::Quasidihedral: {
      long n = param(spec, 0);
      require(n >= 4, "quasidihedral QD_2^n requires n >= 4");
      long half = checked_pow(2, n - 1);
      return metacyclic(half, 2, 0, half / 2 - 1, "a", "b");
    }
    case Family::M2rs: {
      long r = param(spec, 0), s = param(spec, 1);
      require(r >= 3 && s >= 1, "M_2rs requires r >= 3 and s >= 1");
      return metacyclic(r, 2 * s, 0, -1, "a", "b");
    }
    case Family::Dicyclic: {
      long n = param(spec, 0);
      require(n >= 2, "dicyclic Q_4n requires n >= 2");
      return metacyclic(2 * n, 2, n, -1, "x", "y");
    }
    case Family::U6n: {
      long n = param(spec, 0);
      require(n >= 1, "U_6n requires n >= 1");
      return metacyclic(3, 2 * n, 0, -1, "y", "x");
    }
    case Family::SD8n: {
      long n = param(spec, 0);
      require(n > 1, "SD_8n requires n > 1");
      return metacyclic(4 * n, 2, 0, 2 * n - 1, "a", "b");
    }
    case Family::V8n: {
      long n = param(spec, 0);
      require(n > 1, "V_8n requires n > 1");
      return build_v8n(n);
    }
    case Family::Frobenius: {
      long p = param(spec, 0), q = param(spec, 1);
      // q need not be prime: Sz(2) is F_{5,4}.
      if (!is_prime(p) || q < 2 || (p - 1) % q != 0)
        throw NotAFrobeniusPair("F_{p,q} requires a prime p and q >= 2 with q | p-1");
      long u = pow_mod(least_primitive_root(p), (p - 1) / q, p);
      // b^-1 a b = a^u, i.e. b a b^-1 = a^(u^-1) = a^(u^(q-1)).
      return metacyclic(p, q, 0, pow_mod(u, q - 1, p), "a", "b");
    }
    case Family::HanakiV: return build_hanaki(HanakiSpec::anv(param(spec, 0)));
    case Family::HanakiP: return build_hanaki(HanakiSpec::anp(param(spec, 0), param(spec, 1)));
    case Family::Symmetric: return build_permutations(param(spec, 0), false);
    case Family::Alternating: return build_permutations(param(spec, 0), true);
    case Family::SL2_3: return build_sl2_3();
    case Family::Cyclic: {
      long k = param(spec, 0);
      require(k >= 1, "cyclic group requires k >= 1");
      return build_cyclic(k);
    }
    case Family::Modular16: return metacyclic(8, 2, 0, 5, "a", "b");
    case Family::Pauli: return build_pauli();
    case Family::SmallGroup16_3: return build_sg16_3();
    case Family::DirectProduct: {
      if (!spec.left || !spec.right) throw ParameterOutOfRange("direct product needs two factors");
      if (spec.expected_order() > kOrderCap) throw OrderCapExceeded("direct product order exceeds cap");
      return direct_product(build_group(*spec.left), build_group(*spec.right));
    }
  }
  throw std::logic_error("unknown family");
}

std::string GroupSpec::str() const {
  auto p = [&](std::size_t i) { return std::to_string(param(*this, i)); };
  switch (family) {
    case Family::Dihedral: return "D:2m=" + std::to_string(2 * param(*this, 0));
    case Family::Quasidihedral: return "QD:2^" + p(0);
    case Family::M2rs: return "M:r=" + p(0) + ",s=" + p(1);
    case Family::Dicyclic: return "Q:4n=" + std::to_string(4 * param(*this, 0));
    case Family::U6n: return "U:6n=" + std::to_string(6 * param(*this, 0));
    case Family::SD8n: return "SD:8n=" + std::to_string(8 * param(*this, 0));
    case Family::V8n: return "V:8n=" + std::to_string(8 * param(*this, 0));
    case Family::Frobenius: return "F:p=" + p(0) + ",q=" + p(1);
    case Family::HanakiV: return "HV:n=" + p(0);
    case Family::HanakiP: return "HP:n=" + p(0) + ",p=" + p(1);
    case Family::Symmetric: return "S" + p(0);
    case Family::Alternating: return "A" + p(0);
    case Family::SL2_3: return "SL23";
    case Family::Cyclic: return "Z:" + p(0);
    case Family::Modular16: return "M16";
    case Family::Pauli: return "D8*Z4";
    case Family::SmallGroup16_3: return "SG16_3";
    case Family::DirectProduct: return "prod(" + left->str() + "," + right->str() + ")";
  }
  return "?";
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

long to_long(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 9) throw SpecParseError("bad number in group spec: " + whole);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw SpecParseError("bad number in group spec: " + whole);
  return std::stol(s);
}

std::map<std::string, long> key_values(const std::string& body, const std::string& whole) {
  std::map<std::string, long> kv;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw SpecParseError("expected key=value in group spec: " + whole);
    kv[item.substr(0, eq)] = to_long(item.substr(eq + 1), whole);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return kv;
}

// Accepts key "<mult><sym>" (e.g. "2m" with value 2m) or "<sym>".
long scaled_param(const std::map<std::string, long>& kv, long mult, const std::string& sym,
                  const std::string& whole) {
  std::string scaled = std::to_string(mult) + sym;
  if (kv.size() != 1) throw SpecParseError("expected one parameter in group spec: " + whole);
  if (kv.count(sym)) return kv.at(sym);
  if (kv.count(scaled)) {
    long v = kv.at(scaled);
    if (v % mult != 0) throw SpecParseError(scaled + " must be a multiple of " + std::to_string(mult) + ": " + whole);
    return v / mult;
  }
  throw SpecParseError("expected " + scaled + "= or " + sym + "= in group spec: " + whole);
}

long need(const std::map<std::string, long>& kv, const std::string& key, const std::string& whole) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SpecParseError("missing " + key + "= in group spec: " + whole);
  return it->second;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw SpecParseError("empty group spec");
  if (s.rfind("prod(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(5, s.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        // A top-level comma may also separate key=value pairs of the left
        // factor (e.g. prod(M:r=5,s=2,Z2)); try each split point.
        try {
          return GroupSpec::product(parse_group_spec(inner.substr(0, i)), parse_group_spec(inner.substr(i + 1)));
        } catch (const SpecParseError&) {
          continue;
        }
      }
    }
    throw SpecParseError("prod(...) needs two factors: " + text);
  }
  if (s == "SL23" || s == "SL(2,3)") return GroupSpec::sl2_3();
  if (s == "Sz2" || s == "Sz(2)") return GroupSpec::frobenius(5, 4);
  if (s == "M16") return GroupSpec::modular16();
  if (s == "D8*Z4" || s == "Pauli") return GroupSpec::pauli();
  if (s == "SG16_3" || s == "SG(16,3)") return GroupSpec::small_group_16_3();

  std::size_t colon = s.find(':');
  if (colon == std::string::npos) {
    // Named shorthands: S4, A5, Z4.
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string head = s.substr(0, i), num = s.substr(i);
    if (num.empty()) throw SpecParseError("unknown group spec: " + text);
    long k = to_long(num, text);
    if (head == "S") return GroupSpec::symmetric(k);
    if (head == "A") return GroupSpec::alternating(k);
    if (head == "Z") return GroupSpec::cyclic(k);
    throw SpecParseError("unknown group spec: " + text);
  }
  std::string fam = s.substr(0, colon), body = s.substr(colon + 1);
  if (fam == "QD") {
    if (body.rfind("2^", 0) == 0) return GroupSpec::quasidihedral(to_long(body.substr(2), text));
    auto kv = key_values(body, text);
    return GroupSpec::quasidihedral(need(kv, "n", text));
  }
  if (fam == "Z" && body.find('=') == std::string::npos) return GroupSpec::cyclic(to_long(body, text));
  auto kv = key_values(body, text);
  if (fam == "D") return GroupSpec::dihedral(scaled_param(kv, 2, "m", text));
  if (fam == "Q") return GroupSpec::dicyclic(scaled_param(kv, 4, "n", text));
  if (fam == "U") return GroupSpec::u6n(scaled_param(kv, 6, "n", text));
  if (fam == "SD") return GroupSpec::sd8n(scaled_param(kv, 8, "n", text));
  if (fam == "V") return GroupSpec::v8n(scaled_param(kv, 8, "n", text));
  if (fam == "M") return GroupSpec::m2rs(need(kv, "r", text), need(kv, "s", text));
  if (fam == "F") return GroupSpec::frobenius(need(kv, "p", text), need(kv, "q", text));
  if (fam == "HV") return GroupSpec::hanaki_v(need(kv, "n", text));
  if (fam == "HP") return GroupSpec::hanaki_p(need(kv, "n", text), need(kv, "p", text));
  if (fam == "S") return GroupSpec::symmetric(need(kv, "k", text));
  if (fam == "A") return GroupSpec::alternating(need(kv, "k", text));
  if (fam == "Z") return GroupSpec::cyclic(need(kv, "k", text));
  throw SpecParseError("unknown group family: " + fam);
}

}  // namespace ncg
