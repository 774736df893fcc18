#pragma once

// Costas property verification and small-N exhaustive enumeration.
//
// A candidate of side N is a permutation f of {1..N}: column x (1-based)
// carries its dot in row f(x). It is Costas iff for every gap k the values
// f(x + k) - f(x), x = 1..N-k, are pairwise distinct.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "costas/error.hpp"

namespace costas {

class CostasCandidate {
 public:
  CostasCandidate() = default;

  /// Throws NotAPermutation unless perm is a permutation of {1..perm.size()}.
  explicit CostasCandidate(std::vector<int> perm);

  int size() const { return static_cast<int>(perm_.size()); }
  bool empty() const { return perm_.empty(); }

  /// Row of the dot in column x, 1-based.
  int operator()(int x) const { return perm_[static_cast<std::size_t>(x - 1)]; }

  const std::vector<int>& perm() const { return perm_; }

  friend bool operator==(const CostasCandidate&, const CostasCandidate&) = default;
  friend auto operator<=>(const CostasCandidate&, const CostasCandidate&) = default;

 private:
  std::vector<int> perm_;
};

bool is_permutation_of_1_to_n(std::span<const int> perm);

/// Row k - 1 holds f(x + k) - f(x) for x = 1..N-k.
using DifferenceTable = std::vector<std::vector<int>>;

DifferenceTable difference_table(const CostasCandidate& c);

/// A repeated displacement: f(x + k) - f(x) == f(y + k) - f(y), x < y.
struct Collision {
  int k;
  int x;
  int y;

  friend bool operator==(const Collision&, const Collision&) = default;
};

/// First collision in (k, y) order, or nullopt for a Costas array.
std::optional<Collision> find_collision(const CostasCandidate& c);

bool is_costas(const CostasCandidate& c);

inline constexpr int kMaxEnumerationSize = 8;

/// All Costas permutations of side n in lexicographic order.
std::vector<CostasCandidate> enumerate_costas(int n);

/// Drops the leading t x t block (which must hold exactly t dots) and
/// renumbers: f'(x) = f(x + t) - t.
CostasCandidate remove_leading(const CostasCandidate& c, int t);

/// Drops column 1 when its dot sits in the last row N.
CostasCandidate remove_first_column_top_row(const CostasCandidate& c);

/// Drops the last column when its dot sits in row 1; f'(x) = f(x) - 1.
CostasCandidate remove_last_column_bottom_row(const CostasCandidate& c);

}  // namespace costas
