#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace costas {

/// COSTAS_THREADS if set to a positive integer, else the hardware default.
inline unsigned worker_count() {
  if (const char* env = std::getenv("COSTAS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous shards and runs fn(shard, begin, end) on
/// each, one thread per shard. Shard s always covers the same range for a
/// given (n, shards), so results merged in shard order are deterministic.
template <typename Fn>
void for_each_shard(std::size_t n, unsigned shards, Fn&& fn) {
  shards = static_cast<unsigned>(std::clamp<std::size_t>(shards, 1, std::max<std::size_t>(n, 1)));
  if (shards == 1) {
    fn(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) {
    const std::size_t begin = n * s / shards;
    const std::size_t end = n * (s + 1) / shards;
    threads.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace costas
