#include "costas/density.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <tuple>

#include "costas/error.hpp"
#include "costas/ff.hpp"
#include "costas/fpr.hpp"
#include "costas/parallel.hpp"

namespace costas::density {

namespace {

constexpr u64 kArtinBound = 1'000'000;

// Powers of the smallest primitive root mod p plus a mask of exponents
// coprime to p - 1, i.e. those t for which g^t is primitive. Rebuilt per
// prime; each census worker owns one.
class PrimitivePowers {
 public:
  void reset(u64 p) {
    p_ = p;
    n_ = p - 1;
    const auto factors = ff::factorize(n_);
    u64 g = 2;
    while (!ff::is_primitive_root(g, p, factors)) ++g;
    powers_.resize(n_);
    u64 x = 1;
    for (u64 t = 0; t < n_; ++t) {
      powers_[t] = static_cast<std::uint32_t>(x);
      x = ff::mul_mod(x, g, p);
    }
    coprime_.assign(n_, 1);
    coprime_[0] = n_ == 1;
    for (const auto& pp : factors) {
      for (u64 t = 0; t < n_; t += pp.prime) coprime_[t] = 0;
    }
  }

  template <typename OnHit>
  void scan(u64 e1, u64 e2, OnHit&& on_hit) const {
    for (u64 t = 1; t < n_; ++t) {
      if (!coprime_[t]) continue;
      const u64 sum = u64{powers_[t * e1 % n_]} + powers_[t * e2 % n_];
      if (sum == 1 || sum == p_ + 1) {
        if (!on_hit(powers_[t])) return;
      }
    }
  }

  bool exists(u64 e1, u64 e2) const {
    bool found = false;
    scan(e1, e2, [&](u64) {
      found = true;
      return false;
    });
    return found;
  }

  std::optional<u64> smallest(u64 e1, u64 e2) const {
    std::optional<u64> best;
    scan(e1, e2, [&](u64 alpha) {
      if (!best || alpha < *best) best = alpha;
      return true;
    });
    return best;
  }

 private:
  u64 p_ = 0;
  u64 n_ = 0;
  std::vector<std::uint32_t> powers_;
  std::vector<std::uint8_t> coprime_;
};

std::pair<u64, u64> require_exponents(u64 p, const ExpExpr& e1, const ExpExpr& e2) {
  const auto a = e1.evaluate(p);
  const auto b = e2.evaluate(p);
  if (!a || !b) {
    throw Error(ErrorCode::ExponentOutOfRange,
                "exponents " + to_string(e1) + ", " + to_string(e2) + " leave [1, p-2] at p = " + std::to_string(p));
  }
  return {*a, *b};
}

std::vector<u64> normalized_checkpoints(u64 limit, std::span<const u64> checkpoints) {
  std::vector<u64> out(checkpoints.begin(), checkpoints.end());
  if (out.empty()) return default_checkpoints(limit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() > limit) {
    throw Error(ErrorCode::InvalidArgument, "checkpoint " + std::to_string(out.back()) + " exceeds limit " + std::to_string(limit));
  }
  return out;
}

enum : std::uint8_t { kMiss = 0, kHit = 1, kSkip = 2 };

// Classifies every prime <= limit with classify(p) in parallel
// shards, then folds the flags into checkpoint rows in prime order.
template <typename Classify>
CensusResult run_census(u64 limit, std::span<const u64> checkpoints, std::optional<double> predicted, Classify&& classify) {
  const auto xs = normalized_checkpoints(limit, checkpoints);
  const auto primes = prime_sieve(limit);
  std::vector<std::uint8_t> flags(primes.size(), kMiss);

  for_each_shard(primes.size(), worker_count(), [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) flags[i] = classify(u64{primes[i]});
  });

  CensusResult result;
  u64 count = 0;
  std::size_t idx = 0;
  for (u64 x : xs) {
    for (; idx < primes.size() && primes[idx] <= x; ++idx) {
      if (flags[idx] == kHit) ++count;
    }
    CensusRow row;
    row.x = x;
    row.count = count;
    row.pi_x = idx;
    row.ratio = idx == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(idx);
    row.predicted = predicted;
    result.rows.push_back(row);
  }
  result.skipped = static_cast<u64>(std::count(flags.begin(), flags.end(), kSkip));
  return result;
}

}  // namespace

std::optional<u64> ExpExpr::evaluate(u64 p) const {
  if (p < 3) return std::nullopt;
  const i64 n = static_cast<i64>(p - 1);
  i64 e = c + h * (n / 2);
  if (e < 1 || e > n - 1) {
    if (h % 2 != 0) return std::nullopt;
    e = ((e % n) + n) % n;
    if (e < 1) return std::nullopt;
  }
  return static_cast<u64>(e);
}

std::string to_string(const ExpExpr& e) { return std::to_string(e.c) + "," + std::to_string(e.h); }

ExpExpr parse_exp_expr(const std::string& text) {
  std::istringstream in(text);
  ExpExpr e;
  char comma = 0;
  if (!(in >> e.c >> comma >> e.h) || comma != ',' || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::InvalidArgument, "expected 'c,h', got '" + text + "'");
  }
  return e;
}

long double artin_constant(u64 prime_bound) {
  if (prime_bound < 2) throw Error(ErrorCode::InvalidArgument, "prime_bound must be >= 2");
  long double product = 1.0L;
  for (u64 p : prime_sieve(prime_bound)) {
    const long double lp = static_cast<long double>(p);
    product *= 1.0L - 1.0L / (lp * (lp - 1.0L));
  }
  return product;
}

PredictedConstants predicted_constants() {
  static const PredictedConstants constants = [] {
    const long double a = artin_constant(kArtinBound);
    return PredictedConstants{static_cast<double>(27.0L / 38.0L * a), static_cast<double>(9.0L / 38.0L * a)};
  }();
  return constants;
}

std::vector<u64> default_checkpoints(u64 limit) {
  std::vector<u64> out;
  for (u64 x = 10; x <= limit; x *= 10) out.push_back(x);
  if (out.empty() || out.back() != limit) out.push_back(limit);
  return out;
}

CensusResult census_t4(u64 limit, std::span<const u64> checkpoints) {
  if (limit > kMaxCensusLimit) throw Error(ErrorCode::LimitTooLarge, "census limit is 10^7");
  return run_census(limit, checkpoints, predicted_constants().c_t4, [](u64 p) -> std::uint8_t {
    if (p == 2) return kMiss;
    const auto factors = ff::factorize(p - 1);
    return fpr::fpr_set_unchecked(p, factors).empty() ? kMiss : kHit;
  });
}

CensusResult census_g4(u64 limit, std::span<const u64> checkpoints) {
  if (limit > kMaxCensusLimit) throw Error(ErrorCode::LimitTooLarge, "census limit is 10^7");
  return run_census(limit, checkpoints, predicted_constants().c_g4,
                    [](u64 p) -> std::uint8_t { return fpr::g4_applicable(p) ? kHit : kMiss; });
}

bool exists_primitive_trinomial(u64 p, const ExpExpr& e1, const ExpExpr& e2) {
  const auto [a, b] = require_exponents(p, e1, e2);
  // With a == b and gcd(a, p-1) = 1, x -> x^a permutes the primitive roots,
  // so the equation 2x = 1 needs its solution (p+1)/2 to be primitive.
  if (a == b && std::gcd(a, p - 1) == 1) {
    const auto factors = ff::factorize(p - 1);
    return ff::is_primitive_root((p + 1) / 2, p, factors);
  }
  PrimitivePowers powers;
  powers.reset(p);
  return powers.exists(a, b);
}

std::optional<u64> primitive_trinomial_witness(u64 p, const ExpExpr& e1, const ExpExpr& e2) {
  const auto [a, b] = require_exponents(p, e1, e2);
  PrimitivePowers powers;
  powers.reset(p);
  return powers.smallest(a, b);
}

CensusResult trinomial_census(u64 limit, const ExpExpr& e1, const ExpExpr& e2, std::span<const u64> checkpoints) {
  if (limit > kMaxTrinomialLimit) throw Error(ErrorCode::LimitTooLarge, "trinomial census limit is 10^6");
  return run_census(limit, checkpoints, known_trinomial_density(e1, e2), [&](u64 p) -> std::uint8_t {
    if (!e1.evaluate(p) || !e2.evaluate(p)) return kSkip;
    return exists_primitive_trinomial(p, e1, e2) ? kHit : kMiss;
  });
}

std::optional<double> known_trinomial_density(const ExpExpr& e1, const ExpExpr& e2) {
  auto is_pair = [&](ExpExpr x, ExpExpr y) { return (e1 == x && e2 == y) || (e1 == y && e2 == x); };
  if (is_pair({1, 0}, {2, 0}) || is_pair({2, 0}, {1, 1})) return predicted_constants().c_t4;
  if (is_pair({1, 0}, {1, 0})) return static_cast<double>(artin_constant(kArtinBound));
  if (is_pair({1, 0}, {-1, 2})) return 0.0;
  return std::nullopt;
}

std::string_view claim_tag(ZeroDensityClaim claim) {
  switch (claim) {
    case ZeroDensityClaim::HalfShiftedPair: return "a";
    case ZeroDensityClaim::MixedPair: return "b";
    case ZeroDensityClaim::InversePair: return "c";
  }
  return "?";
}

u64 claim_bound(ZeroDensityClaim claim, int i) {
  switch (claim) {
    case ZeroDensityClaim::HalfShiftedPair: return 3 * static_cast<u64>(i);
    case ZeroDensityClaim::MixedPair: return 6 * static_cast<u64>(i);
    case ZeroDensityClaim::InversePair: return 7;
  }
  return 0;
}

ZeroDensityReport verify_zero_density_claims(u64 limit, int i_max) {
  if (limit > kMaxZeroDensityLimit) throw Error(ErrorCode::LimitTooLarge, "limit must be <= 10^5");
  if (i_max < 1 || i_max > kMaxZeroDensityI) throw Error(ErrorCode::InvalidArgument, "i_max must be in [1, 10]");

  constexpr ZeroDensityClaim kClaims[] = {ZeroDensityClaim::HalfShiftedPair, ZeroDensityClaim::MixedPair,
                                          ZeroDensityClaim::InversePair};
  auto exponents = [](ZeroDensityClaim claim, i64 i) -> std::pair<ExpExpr, ExpExpr> {
    switch (claim) {
      case ZeroDensityClaim::HalfShiftedPair: return {{i, 1}, {2 * i, 1}};
      case ZeroDensityClaim::MixedPair: return {{i, 0}, {2 * i, 1}};
      case ZeroDensityClaim::InversePair: return {{i, 0}, {-i, 2}};
    }
    return {};
  };

  const auto primes = prime_sieve(limit);
  const unsigned shards = worker_count();
  std::vector<ZeroDensityReport> partial(std::max<std::size_t>(1, std::min<std::size_t>(shards, primes.size())));

  for_each_shard(primes.size(), static_cast<unsigned>(partial.size()), [&](unsigned s, std::size_t begin, std::size_t end) {
    auto& out = partial[s];
    PrimitivePowers powers;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const u64 p = primes[idx];
      bool ready = false;
      for (ZeroDensityClaim claim : kClaims) {
        for (int i = 1; i <= i_max; ++i) {
          const auto [e1, e2] = exponents(claim, i);
          const auto a = e1.evaluate(p);
          const auto b = e2.evaluate(p);
          if (!a || !b) {
            ++out.skipped;
            continue;
          }
          ++out.checked;
          if (!ready) {
            powers.reset(p);
            ready = true;
          }
          if (const auto w = powers.smallest(*a, *b)) {
            ZeroDensityFinding f{claim, p, i, *w};
            (p > claim_bound(claim, i) ? out.violations : out.exceptions).push_back(f);
          }
        }
      }
    }
  });

  ZeroDensityReport report;
  for (auto& part : partial) {
    report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
    report.exceptions.insert(report.exceptions.end(), part.exceptions.begin(), part.exceptions.end());
    report.checked += part.checked;
    report.skipped += part.skipped;
  }
  auto order = [](const ZeroDensityFinding& x, const ZeroDensityFinding& y) {
    return std::tie(x.claim, x.i, x.p) < std::tie(y.claim, y.i, y.p);
  };
  std::sort(report.violations.begin(), report.violations.end(), order);
  std::sort(report.exceptions.begin(), report.exceptions.end(), order);
  return report;
}

}  // namespace costas::density
