#pragma once

#include <cstdint>
#include <vector>

namespace costas::density {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Primes <= limit, ascending, from a segmented sieve of Eratosthenes.
/// Throws LimitTooLarge above 10^8.
std::vector<std::uint32_t> prime_sieve(std::uint64_t limit);

/// pi(limit), same sieve without materializing the list.
std::uint64_t count_primes(std::uint64_t limit);

}  // namespace costas::density
