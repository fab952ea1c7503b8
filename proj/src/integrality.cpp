#include "ncg/integrality.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ncg {

const char* square_kind_name(SquareKind k) {
  switch (k) {
    case SquareKind::K1: return "K1";
    case SquareKind::K2: return "K2";
    case SquareKind::K3: return "K3";
    case SquareKind::K4: return "K4";
  }
  return "?";
}

std::optional<SquareKind> parse_square_kind(const std::string& s) {
  if (s == "K1") return SquareKind::K1;
  if (s == "K2") return SquareKind::K2;
  if (s == "K3") return SquareKind::K3;
  if (s == "K4") return SquareKind::K4;
  return std::nullopt;
}

BigInt square_value(SquareKind kind, long n) {
  if (n < 1) throw std::invalid_argument("square_value requires n >= 1");
  const BigInt N = n;
  switch (kind) {
    case SquareKind::K1: return 8 * N * N - 16 * N + 9;
    case SquareKind::K2: return 2 * N * N - 8 * N + 9;
    case SquareKind::K3: return 32 * N * N - 32 * N + 9;
    case SquareKind::K4: {
      BigInt a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), 2, static_cast<unsigned long>(2 * n - 1));
      mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(n + 2));
      return a - b + 9;
    }
  }
  return 0;
}

std::optional<BigInt> is_perfect_square(const BigInt& k) {
  if (k < 0) throw NegativeInput("is_perfect_square of a negative number");
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

bool is_q_integral(const ExactSpectrum& spec) {
  for (const auto& [v, mult] : spec.entries)
    if (!v.is_rational() || !is_integer(v.a())) return false;
  return true;
}

namespace {

using u128 = unsigned __int128;

// Quadratic kinds fit in 128 bits for n <= 1e9: value = c2 n^2 - c1 n + 9.
bool quadratic_coeffs(SquareKind kind, u128& c2, u128& c1) {
  switch (kind) {
    case SquareKind::K1: c2 = 8, c1 = 16; return true;
    case SquareKind::K2: c2 = 2, c1 = 8; return true;
    case SquareKind::K3: c2 = 32, c1 = 32; return true;
    case SquareKind::K4: return false;
  }
  return false;
}

std::optional<unsigned long long> isqrt_exact(u128 v) {
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  if (static_cast<u128>(r) * r != v) return std::nullopt;
  return r;
}

void scan(SquareKind kind, long lo, long hi, std::vector<SquareHit>& out) {
  u128 c2 = 0, c1 = 0;
  const bool fast = quadratic_coeffs(kind, c2, c1) && hi <= 1'000'000'000L;
  for (long n = lo; n <= hi; ++n) {
    if (fast) {
      const u128 N = static_cast<u128>(n);
      // 2n^2 - 8n + 9 is 3 at n = 1; the subtraction never underflows for n >= 1.
      const u128 v = c2 * N * N + 9 - c1 * N;
      if (auto r = isqrt_exact(v)) out.push_back({n, BigInt(std::to_string(*r))});
    } else if (auto r = is_perfect_square(square_value(kind, n))) {
      out.push_back({n, *r});
    }
  }
}

}  // namespace

std::vector<SquareHit> square_sequence(SquareKind kind, long bound, int threads) {
  std::vector<SquareHit> all;
  if (bound < 1) return all;
  const long workers = std::clamp<long>(threads, 1, std::max<long>(1, bound / 1000 + 1));
  std::vector<std::vector<SquareHit>> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  const long chunk = (bound + workers - 1) / workers;
  for (long w = 0; w < workers; ++w) {
    const long lo = 1 + w * chunk, hi = std::min(bound, (w + 1) * chunk);
    if (lo > hi) break;
    if (workers == 1)
      scan(kind, lo, hi, parts[0]);
    else
      pool.emplace_back(scan, kind, lo, hi, std::ref(parts[static_cast<std::size_t>(w)]));
  }
  for (auto& t : pool) t.join();
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

}  // namespace ncg
