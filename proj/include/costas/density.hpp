#pragma once

// Prime censuses for the T4/G4 applicability densities, Artin's constant,
// and existence experiments for primitive roots solving a^i + a^j = 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costas/sieve.hpp"

namespace costas::density {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Exponent c + h * (p - 1) / 2, evaluated per prime.
struct ExpExpr {
  i64 c = 0;
  i64 h = 0;

  /// The exponent for p if it lands in [1, p - 2]. When h is even the
  /// h * (p - 1) / 2 term is a multiple of p - 1 and the value is reduced
  /// mod p - 1 before the range check; odd h is never wrapped.
  std::optional<u64> evaluate(u64 p) const;

  friend bool operator==(const ExpExpr&, const ExpExpr&) = default;
};

std::string to_string(const ExpExpr& e);

/// Parses "c,h".
ExpExpr parse_exp_expr(const std::string& text);

struct CensusRow {
  u64 x = 0;
  u64 count = 0;
  u64 pi_x = 0;
  double ratio = 0.0;
  std::optional<double> predicted;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  /// Primes where an exponent left [1, p - 2] (trinomial censuses only).
  /// They stay in pi_x but can never be counted.
  u64 skipped = 0;
};

inline constexpr u64 kMaxCensusLimit = 10'000'000;
inline constexpr u64 kMaxTrinomialLimit = 1'000'000;

/// Product of 1 - 1/(p(p-1)) over primes p <= prime_bound.
long double artin_constant(u64 prime_bound);

struct PredictedConstants {
  double c_t4;  // 27/38 * A
  double c_g4;  // 9/38 * A
};

/// Uses artin_constant(10^6).
PredictedConstants predicted_constants();

/// Powers of 10 up to limit, plus limit itself.
std::vector<u64> default_checkpoints(u64 limit);

/// Primes p <= x having a Fibonacci primitive root, at each checkpoint.
CensusResult census_t4(u64 limit, std::span<const u64> checkpoints = {});

/// Primes p <= x admitting the G4 construction.
CensusResult census_g4(u64 limit, std::span<const u64> checkpoints = {});

/// Some primitive root a mod p has a^e1 + a^e2 = 1. Throws
/// ExponentOutOfRange if either exponent leaves [1, p - 2].
bool exists_primitive_trinomial(u64 p, const ExpExpr& e1, const ExpExpr& e2);

/// Smallest such primitive root, by exhaustive search (no shortcuts).
std::optional<u64> primitive_trinomial_witness(u64 p, const ExpExpr& e1, const ExpExpr& e2);

CensusResult trinomial_census(u64 limit, const ExpExpr& e1, const ExpExpr& e2, std::span<const u64> checkpoints = {});

/// Limiting density where one is known or conjectured for the pair, used as
/// the "predicted" column: (1,2) and (2,(p-1)/2+1) -> 27/38 A, the i = j = 1
/// case -> A, (1, p-2) -> 0.
std::optional<double> known_trinomial_density(const ExpExpr& e1, const ExpExpr& e2);

enum class ZeroDensityClaim {
  HalfShiftedPair,  // a^((p-1)/2+i) + a^((p-1)/2+2i) = 1, stated for p > 3i
  MixedPair,        // a^i + a^(2i+(p-1)/2) = 1, stated for p > 6i
  InversePair,      // a^i + a^(p-1-i) = 1, stated for p > 7
};

std::string_view claim_tag(ZeroDensityClaim claim);

/// Lower bound above which the claim is stated to have no solutions.
u64 claim_bound(ZeroDensityClaim claim, int i);

struct ZeroDensityFinding {
  ZeroDensityClaim claim;
  u64 p;
  int i;
  u64 witness;  // smallest primitive root solving the equation
};

struct ZeroDensityReport {
  std::vector<ZeroDensityFinding> violations;  // solutions with p above the stated bound
  std::vector<ZeroDensityFinding> exceptions;  // solutions at or below it
  u64 checked = 0;                             // (claim, i, p) triples searched
  u64 skipped = 0;                             // triples with an exponent out of range
};

inline constexpr u64 kMaxZeroDensityLimit = 100'000;
inline constexpr int kMaxZeroDensityI = 10;

ZeroDensityReport verify_zero_density_claims(u64 limit, int i_max);

}  // namespace costas::density
