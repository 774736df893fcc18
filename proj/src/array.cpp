#include "costas/array.hpp"

#include <string>

namespace costas {

bool is_permutation_of_1_to_n(std::span<const int> perm) {
  const auto n = perm.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

CostasCandidate::CostasCandidate(std::vector<int> perm) : perm_(std::move(perm)) {
  if (!is_permutation_of_1_to_n(perm_)) {
    throw Error(ErrorCode::NotAPermutation, "entries must be a permutation of 1.." + std::to_string(perm_.size()));
  }
}

DifferenceTable difference_table(const CostasCandidate& c) {
  const int n = c.size();
  DifferenceTable table;
  if (n > 1) table.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(n - k));
    for (int x = 1; x + k <= n; ++x) row.push_back(c(x + k) - c(x));
    table.push_back(std::move(row));
  }
  return table;
}

std::optional<Collision> find_collision(const CostasCandidate& c) {
  const int n = c.size();
  // first_x[d + n] holds the column that produced difference d in the
  // current row; stamp marks which row wrote it, so no per-row reset.
  std::vector<int> first_x(static_cast<std::size_t>(2 * n + 1), 0);
  std::vector<int> stamp(static_cast<std::size_t>(2 * n + 1), 0);
  for (int k = 1; k < n; ++k) {
    for (int x = 1; x + k <= n; ++x) {
      const auto slot = static_cast<std::size_t>(c(x + k) - c(x) + n);
      if (stamp[slot] == k) return Collision{k, first_x[slot], x};
      stamp[slot] = k;
      first_x[slot] = x;
    }
  }
  return std::nullopt;
}

bool is_costas(const CostasCandidate& c) { return !find_collision(c).has_value(); }

namespace {

class Enumerator {
 public:
  explicit Enumerator(int n)
      : n_(n),
        perm_(static_cast<std::size_t>(n)),
        row_used_(static_cast<std::size_t>(n + 1), false),
        diff_used_(static_cast<std::size_t>(n * (2 * n + 1)), 0) {}

  std::vector<CostasCandidate> run() {
    place(0);
    return std::move(found_);
  }

 private:
  std::uint8_t& used(int k, int d) { return diff_used_[static_cast<std::size_t>(k * (2 * n_ + 1) + d + n_)]; }

  void place(int col) {
    if (col == n_) {
      found_.emplace_back(perm_);
      return;
    }
    for (int row = 1; row <= n_; ++row) {
      if (row_used_[static_cast<std::size_t>(row)]) continue;
      int k = 1;
      for (; k <= col; ++k) {
        if (used(k, row - perm_[static_cast<std::size_t>(col - k)])) break;
      }
      if (k <= col) continue;

      row_used_[static_cast<std::size_t>(row)] = true;
      perm_[static_cast<std::size_t>(col)] = row;
      for (k = 1; k <= col; ++k) used(k, row - perm_[static_cast<std::size_t>(col - k)]) = 1;
      place(col + 1);
      for (k = 1; k <= col; ++k) used(k, row - perm_[static_cast<std::size_t>(col - k)]) = 0;
      row_used_[static_cast<std::size_t>(row)] = false;
    }
  }

  int n_;
  std::vector<int> perm_;
  std::vector<bool> row_used_;
  std::vector<std::uint8_t> diff_used_;
  std::vector<CostasCandidate> found_;
};

}  // namespace

std::vector<CostasCandidate> enumerate_costas(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > kMaxEnumerationSize) throw Error(ErrorCode::SizeTooLarge, "enumeration is capped at n = 8");
  return Enumerator(n).run();
}

CostasCandidate remove_leading(const CostasCandidate& c, int t) {
  const int n = c.size();
  if (t < 0 || t > n) throw Error(ErrorCode::BlockNotClosed, "t = " + std::to_string(t) + " outside [0, " + std::to_string(n) + "]");
  for (int x = 1; x <= t; ++x) {
    if (c(x) > t) {
      throw Error(ErrorCode::BlockNotClosed,
                  "column " + std::to_string(x) + " has its dot in row " + std::to_string(c(x)) + " > " + std::to_string(t));
    }
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - t));
  for (int x = t + 1; x <= n; ++x) out.push_back(c(x) - t);
  return CostasCandidate(std::move(out));
}

CostasCandidate remove_first_column_top_row(const CostasCandidate& c) {
  const int n = c.size();
  if (n == 0 || c(1) != n) throw Error(ErrorCode::BlockNotClosed, "column 1 does not hold its dot in the last row");
  return CostasCandidate(std::vector<int>(c.perm().begin() + 1, c.perm().end()));
}

CostasCandidate remove_last_column_bottom_row(const CostasCandidate& c) {
  const int n = c.size();
  if (n == 0 || c(n) != 1) throw Error(ErrorCode::BlockNotClosed, "last column does not hold its dot in row 1");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int x = 1; x < n; ++x) out.push_back(c(x) - 1);
  return CostasCandidate(std::move(out));
}

}  // namespace costas
