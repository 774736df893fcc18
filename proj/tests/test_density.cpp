#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "costas/density.hpp"
#include "costas/fpr.hpp"
#include "oracles.hpp"

using namespace costas;
using namespace costas::density;

namespace {

std::vector<u64> all_checkpoints(u64 limit) {
  std::vector<u64> xs(limit);
  std::iota(xs.begin(), xs.end(), u64{1});
  return xs;
}

/// x values where the census count steps up, i.e. the counted primes.
std::vector<u64> counted_primes(const CensusResult& r) {
  std::vector<u64> out;
  u64 last = 0;
  for (const auto& row : r.rows) {
    if (row.count > last) out.push_back(row.x);
    last = row.count;
  }
  return out;
}

/// Smallest primitive root a with a^e1 + a^e2 = 1, by trying every residue.
std::optional<u64> naive_witness(u64 p, u64 e1, u64 e2) {
  for (u64 a = 2; a < p; ++a) {
    if (!oracle::naive_is_primitive(a, p)) continue;
    if ((oracle::naive_pow(a, e1, p) + oracle::naive_pow(a, e2, p)) % p == 1) return a;
  }
  return std::nullopt;
}

struct ThreadsEnv {
  explicit ThreadsEnv(const char* value) { setenv("COSTAS_THREADS", value, 1); }
  ~ThreadsEnv() { unsetenv("COSTAS_THREADS"); }
};

}  // namespace

TEST_CASE("prime_sieve examples") {
  CHECK(prime_sieve(30).size() == 10);
  CHECK(prime_sieve(2) == std::vector<std::uint32_t>{2});
  CHECK(prime_sieve(1).empty());
  CHECK(count_primes(1'000'000) == 78498);
  CHECK_THROWS_AS(prime_sieve(kMaxSieveLimit + 1), Error);
}

TEST_CASE("prime_sieve agrees with a plain sieve up to 10^6") {
  const u64 n = 1'000'000;
  std::vector<char> composite(n + 1, 0);
  std::vector<std::uint32_t> expected;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    expected.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= n; j += i) composite[j] = 1;
  }
  CHECK(expected.size() == 78498);
  CHECK(prime_sieve(n) == expected);
  for (u64 limit : {3u, 262'143u, 262'144u, 262'145u, 524'288u}) {
    const auto it = std::upper_bound(expected.begin(), expected.end(), limit);
    CHECK(prime_sieve(limit).size() == static_cast<std::size_t>(it - expected.begin()));
  }
}

TEST_CASE("artin constant") {
  CHECK(artin_constant(2) == doctest::Approx(0.5));
  CHECK(artin_constant(3) == doctest::Approx(0.5 * (1.0 - 1.0 / 6.0)));
  long double last = 1.0L;
  for (u64 bound : {2u, 10u, 100u, 1000u, 10000u}) {
    const long double a = artin_constant(bound);
    CHECK(a < last);
    last = a;
  }
  CHECK(std::fabs(static_cast<double>(artin_constant(1'000'000)) - 0.3739558138) < 1e-6);
}

TEST_CASE("predicted constants") {
  const auto c = predicted_constants();
  CHECK(std::fabs(c.c_t4 - 0.2657) < 0.0005);
  CHECK(std::fabs(c.c_g4 - 0.08856) < 0.0005);
  CHECK(c.c_t4 / c.c_g4 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("default checkpoints") {
  CHECK(default_checkpoints(1000) == std::vector<u64>{10, 100, 1000});
  CHECK(default_checkpoints(2500) == std::vector<u64>{10, 100, 1000, 2500});
  CHECK(default_checkpoints(7) == std::vector<u64>{7});
}

TEST_CASE("census_t4 examples") {
  const auto r = census_t4(60, all_checkpoints(60));
  CHECK(counted_primes(r) == std::vector<u64>{5, 11, 19, 31, 41, 59});
  const auto last = r.rows.back();
  CHECK(last.x == 60);
  CHECK(last.pi_x == 17);
  CHECK(last.count == 6);
  CHECK(last.predicted.has_value());
  CHECK(census_t4(100'000).rows.back().count > 0);
}

TEST_CASE("census_t4 and census_g4 match per-prime oracles up to 10^4") {
  const std::vector<u64> xs = {100, 1000, 5000, 10'000};
  const auto t4 = census_t4(10'000, xs);
  const auto g4 = census_g4(10'000, xs);
  REQUIRE(t4.rows.size() == xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    u64 t = 0, g = 0, pi = 0;
    for (u64 p : oracle::naive_primes(xs[k])) {
      ++pi;
      bool has_fpr = false;
      for (u64 a = 2; a < p && !has_fpr; ++a) {
        has_fpr = (a * a) % p == (a + 1) % p && oracle::naive_is_primitive(a, p);
      }
      t += has_fpr;
      g += has_fpr && (p == 5 || p % 20 == 1 || p % 20 == 9);
    }
    CAPTURE(xs[k]);
    CHECK(t4.rows[k].pi_x == pi);
    CHECK(t4.rows[k].count == t);
    CHECK(g4.rows[k].count == g);
    CHECK(g4.rows[k].count <= t4.rows[k].count);
    CHECK(t4.rows[k].ratio == doctest::Approx(static_cast<double>(t) / static_cast<double>(pi)));
  }
}

TEST_CASE("census output does not depend on the worker count") {
  const std::vector<u64> xs = {1000, 20'000, 50'000};
  auto run = [&](const char* threads) {
    ThreadsEnv env(threads);
    std::vector<u64> out;
    for (const auto& row : census_t4(50'000, xs).rows) out.push_back(row.count);
    for (const auto& row : census_g4(50'000, xs).rows) out.push_back(row.count);
    for (const auto& row : trinomial_census(50'000, {1, 0}, {1, 0}, xs).rows) out.push_back(row.count);
    const auto z = verify_zero_density_claims(5000, 4);
    out.push_back(z.checked);
    for (const auto& f : z.exceptions) out.push_back(f.p * 100 + static_cast<u64>(f.i));
    return out;
  };
  const auto one = run("1");
  CHECK(run("3") == one);
  CHECK(run("8") == one);
}

TEST_CASE("census errors") {
  CHECK_THROWS_AS(census_t4(kMaxCensusLimit + 1), Error);
  CHECK_THROWS_AS(trinomial_census(kMaxTrinomialLimit + 1, {1, 0}, {2, 0}), Error);
  const std::vector<u64> too_far = {2000};
  CHECK_THROWS_AS(census_t4(1000, too_far), Error);
}

TEST_CASE("ExpExpr evaluation") {
  CHECK(ExpExpr{1, 0}.evaluate(11) == 1u);
  CHECK(ExpExpr{1, 1}.evaluate(11) == 6u);
  CHECK(ExpExpr{-1, 2}.evaluate(11) == 9u);
  CHECK_FALSE(ExpExpr{0, 0}.evaluate(11).has_value());
  CHECK_FALSE(ExpExpr{10, 0}.evaluate(11).has_value());
  CHECK(ExpExpr{12, 0}.evaluate(11) == 2u);  // even h wraps mod p - 1
  CHECK(ExpExpr{11, 2}.evaluate(11) == 1u);  // 11 + 10 wraps to 1
  CHECK_FALSE(ExpExpr{5, 1}.evaluate(11).has_value());
  CHECK(parse_exp_expr("-1,2") == ExpExpr{-1, 2});
  CHECK(to_string(ExpExpr{-1, 2}) == "-1,2");
  CHECK_THROWS_AS(parse_exp_expr("1;2"), Error);
  CHECK_THROWS_AS(parse_exp_expr("1,2,3"), Error);
}

TEST_CASE("exists_primitive_trinomial examples") {
  CHECK(exists_primitive_trinomial(11, {1, 0}, {2, 0}));
  CHECK(primitive_trinomial_witness(11, {1, 0}, {2, 0}) == 7u);
  CHECK_FALSE(exists_primitive_trinomial(11, {1, 0}, {-1, 2}));
  CHECK(exists_primitive_trinomial(11, {2, 0}, {1, 1}));
  try {
    exists_primitive_trinomial(11, {0, 0}, {1, 0});
    FAIL("expected ExponentOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExponentOutOfRange);
  }
}

TEST_CASE("x^(p-2) + x - 1 has no primitive root beyond p = 7") {
  for (u64 p : oracle::naive_primes(10'000)) {
    if (p < 5) continue;
    CAPTURE(p);
    REQUIRE(exists_primitive_trinomial(p, {1, 0}, {-1, 2}) == (p == 7));
  }
  const auto r = trinomial_census(10'000, {1, 0}, {-1, 2}, std::vector<u64>{7, 10'000});
  CHECK(r.rows[0].count == r.rows[1].count);
  CHECK(known_trinomial_density({1, 0}, {-1, 2}) == 0.0);
}

TEST_CASE("trinomial search agrees with exhaustive witness search, p <= 600") {
  const std::vector<std::pair<ExpExpr, ExpExpr>> pairs = {
      {{1, 0}, {2, 0}}, {{1, 0}, {3, 0}}, {{2, 0}, {1, 1}}, {{1, 0}, {1, 0}},
      {{3, 0}, {3, 0}}, {{1, 1}, {2, 1}}, {{2, 0}, {5, 0}}, {{1, 0}, {-1, 2}},
  };
  for (u64 p : oracle::naive_primes(600)) {
    for (const auto& [e1, e2] : pairs) {
      const auto a = e1.evaluate(p);
      const auto b = e2.evaluate(p);
      if (!a || !b) continue;
      CAPTURE(p);
      CAPTURE(to_string(e1));
      CAPTURE(to_string(e2));
      const auto expected = naive_witness(p, *a, *b);
      REQUIRE(primitive_trinomial_witness(p, e1, e2) == expected);
      REQUIRE(exists_primitive_trinomial(p, e1, e2) == expected.has_value());
    }
  }
}

TEST_CASE("d(2, (p-1)/2 + 1) matches FPR existence for p <= 10^4") {
  for (u64 p : oracle::naive_primes(10'000)) {
    if (!ExpExpr{1, 1}.evaluate(p) || !ExpExpr{2, 0}.evaluate(p)) continue;
    CAPTURE(p);
    REQUIRE(exists_primitive_trinomial(p, {2, 0}, {1, 1}) == !fpr::fpr_set(p).empty());
  }
}

TEST_CASE("i = j: 2 a = 1 needs (p+1)/2 primitive, not (p-1)/2") {
  int disagreements_with_half_minus = 0;
  for (u64 p : oracle::naive_primes(1500)) {
    if (p < 5) continue;
    CAPTURE(p);
    const bool brute = naive_witness(p, 1, 1).has_value();
    REQUIRE(exists_primitive_trinomial(p, {1, 0}, {1, 0}) == brute);
    REQUIRE(oracle::naive_is_primitive((p + 1) / 2, p) == brute);
    disagreements_with_half_minus += oracle::naive_is_primitive((p - 1) / 2, p) != brute;
  }
  CHECK(disagreements_with_half_minus > 0);
  CHECK(known_trinomial_density({1, 0}, {1, 0}) == doctest::Approx(0.3739558).epsilon(1e-6));
}

TEST_CASE("zero-density claims: findings are exactly the order-3 / order-6 cases") {
  const u64 limit = 10'000;
  const int i_max = 5;
  const auto report = verify_zero_density_claims(limit, i_max);
  CHECK(report.checked > 0);

  // a^i must have order 3 for (a) and order 6 for (b), (c); with a primitive
  // that means (p - 1) / gcd(i, p - 1) equals that order.
  auto expected_order = [](ZeroDensityClaim c) { return c == ZeroDensityClaim::HalfShiftedPair ? 3u : 6u; };
  auto exps = [](ZeroDensityClaim c, i64 i) -> std::pair<ExpExpr, ExpExpr> {
    if (c == ZeroDensityClaim::HalfShiftedPair) return {{i, 1}, {2 * i, 1}};
    if (c == ZeroDensityClaim::MixedPair) return {{i, 0}, {2 * i, 1}};
    return {{i, 0}, {-i, 2}};
  };
  std::vector<std::tuple<ZeroDensityClaim, int, u64>> predicted, found;
  for (auto c : {ZeroDensityClaim::HalfShiftedPair, ZeroDensityClaim::MixedPair, ZeroDensityClaim::InversePair}) {
    for (int i = 1; i <= i_max; ++i) {
      for (u64 p : oracle::naive_primes(limit)) {
        const auto [e1, e2] = exps(c, i);
        if (!e1.evaluate(p) || !e2.evaluate(p)) continue;
        const bool order_match = (p - 1) / std::gcd(static_cast<u64>(i), p - 1) == expected_order(c);
        // Over GF(3), x^2 - x + 1 = (x + 1)^2, so a^i = -1 also solves (c).
        const bool gf3 = p == 3 && c == ZeroDensityClaim::InversePair && i % 2 == 1;
        if (order_match || gf3) predicted.emplace_back(c, i, p);
      }
    }
  }
  for (const auto* list : {&report.violations, &report.exceptions}) {
    for (const auto& f : *list) {
      found.emplace_back(f.claim, f.i, f.p);
      const auto [e1, e2] = exps(f.claim, f.i);
      CHECK(naive_witness(f.p, *e1.evaluate(f.p), *e2.evaluate(f.p)) == f.witness);
    }
  }
  std::sort(predicted.begin(), predicted.end());
  std::sort(found.begin(), found.end());
  CHECK(found == predicted);

  // Within the stated bounds, (a) holds; (b) fails only at p = 6i + 1 and
  // (c) only where p - 1 divides 6i.
  for (const auto& v : report.violations) {
    CAPTURE(claim_tag(v.claim));
    CAPTURE(v.p);
    CAPTURE(v.i);
    CHECK(v.claim != ZeroDensityClaim::HalfShiftedPair);
    if (v.claim == ZeroDensityClaim::MixedPair) CHECK(v.p == 6 * static_cast<u64>(v.i) + 1);
    if (v.claim == ZeroDensityClaim::InversePair) CHECK((6 * static_cast<u64>(v.i)) % (v.p - 1) == 0);
  }
}

TEST_CASE("zero-density claims for i = 1") {
  const auto report = verify_zero_density_claims(10'000, 1);
  for (const auto& v : report.violations) {
    CAPTURE(claim_tag(v.claim));
    CAPTURE(v.p);
    CHECK(v.claim == ZeroDensityClaim::MixedPair);
    CHECK(v.p == 7);
  }
  bool small_c_exception = false;
  for (const auto& e : report.exceptions) small_c_exception |= e.claim == ZeroDensityClaim::InversePair && e.p <= 7;
  CHECK(small_c_exception);
  CHECK(claim_bound(ZeroDensityClaim::HalfShiftedPair, 2) == 6);
  CHECK(claim_bound(ZeroDensityClaim::MixedPair, 2) == 12);
  CHECK(claim_bound(ZeroDensityClaim::InversePair, 2) == 7);
  CHECK_THROWS_AS(verify_zero_density_claims(kMaxZeroDensityLimit + 1, 1), Error);
  CHECK_THROWS_AS(verify_zero_density_claims(100, kMaxZeroDensityI + 1), Error);
}
