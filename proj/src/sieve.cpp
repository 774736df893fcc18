#include "costas/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "costas/error.hpp"

namespace costas::density {

namespace {

constexpr std::uint64_t kSegmentBytes = 1 << 18;

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Calls emit(p) for each prime <= limit in ascending order.
template <typename Emit>
void sieve_segments(std::uint64_t limit, Emit&& emit) {
  if (limit > kMaxSieveLimit) throw Error(ErrorCode::LimitTooLarge, std::to_string(limit) + " exceeds 10^8");
  if (limit < 2) return;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const auto base = small_primes(root);

  std::vector<std::uint8_t> segment(kSegmentBytes);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegmentBytes) {
    const std::uint64_t hi = std::min(limit, lo + kSegmentBytes - 1);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) segment[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (segment[n - lo]) emit(n);
    }
  }
}

}  // namespace

std::vector<std::uint32_t> prime_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  sieve_segments(limit, [&](std::uint64_t p) { out.push_back(static_cast<std::uint32_t>(p)); });
  return out;
}

std::uint64_t count_primes(std::uint64_t limit) {
  std::uint64_t n = 0;
  sieve_segments(limit, [&](std::uint64_t) { ++n; });
  return n;
}

}  // namespace costas::density
