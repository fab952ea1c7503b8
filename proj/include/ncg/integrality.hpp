#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/rational.hpp"
#include "ncg/spectra.hpp"

namespace ncg {

struct NegativeInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Discriminants of the quadratic Q-spectrum factors:
// K1 = 8n^2-16n+9, K2 = 2n^2-8n+9, K3 = 32n^2-32n+9, K4 = 2^(2n-1)-2^(n+2)+9.
enum class SquareKind { K1, K2, K3, K4 };
const char* square_kind_name(SquareKind k);
std::optional<SquareKind> parse_square_kind(const std::string& s);

// n >= 1.
BigInt square_value(SquareKind kind, long n);

// Integer root when k is a perfect square.
std::optional<BigInt> is_perfect_square(const BigInt& k);

// Every entry is an integer (no surd part).
bool is_q_integral(const ExactSpectrum& spec);

struct SquareHit {
  long n = 0;
  BigInt root;
};
// All 1 <= n <= bound with square_value(kind, n) a perfect square, ascending.
// The scan is split across threads; output does not depend on the split.
std::vector<SquareHit> square_sequence(SquareKind kind, long bound, int threads = 1);

}  // namespace ncg
