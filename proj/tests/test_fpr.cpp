#include <doctest.h>

#include <algorithm>

#include "costas/fpr.hpp"
#include "oracles.hpp"

using namespace costas;
using namespace costas::fpr;

namespace {

std::vector<u64> naive_fprs(u64 p) {
  std::vector<u64> out;
  for (u64 g = 1; g < p; ++g) {
    if ((g * g) % p == (g + 1) % p && oracle::naive_is_primitive(g, p)) out.push_back(g);
  }
  return out;
}

/// Every (alpha, beta) pair of nonzero field elements, no reduction used.
bool g4_pair_exists(const ff::Field& f) {
  const auto prims = ff::primitive_elements(f);
  for (const auto& alpha : prims) {
    for (const auto& beta : prims) {
      if ((alpha + beta).is_one() && (alpha * alpha + ff::inv(beta)).is_one()) return true;
    }
  }
  return false;
}

bool g4_pair_exists_prime(u64 p) {
  std::vector<u64> prims;
  for (u64 a = 1; a < p; ++a) {
    if (oracle::naive_is_primitive(a, p)) prims.push_back(a);
  }
  std::vector<u64> inverse(p, 0);
  for (u64 a = 1; a < p; ++a) {
    for (u64 b = 1; b < p; ++b) {
      if (a * b % p == 1) {
        inverse[a] = b;
        break;
      }
    }
  }
  for (u64 a : prims) {
    for (u64 b : prims) {
      if ((a + b) % p == 1 && (a * a + inverse[b]) % p == 1) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("fpr_candidates examples") {
  CHECK(fpr_candidates(11) == std::vector<u64>{4, 8});
  CHECK(fpr_candidates(7).empty());
  CHECK(fpr_candidates(5) == std::vector<u64>{3});
  CHECK(fpr_candidates(29) == std::vector<u64>{6, 24});
  CHECK_THROWS_AS(fpr_candidates(2), Error);
  CHECK_THROWS_AS(fpr_candidates(15), Error);
}

TEST_CASE("fpr_set examples") {
  CHECK(fpr_set(11) == std::vector<u64>{8});
  CHECK(fpr_set(5) == std::vector<u64>{3});
  CHECK(fpr_set(29).empty());
  CHECK(fpr_set(41) == naive_fprs(41));
}

TEST_CASE("fpr_to_t4_root examples") {
  CHECK(fpr_to_t4_root(8, 11) == 7);
  CHECK(fpr_to_t4_root(3, 5) == 2);
  CHECK(fpr_to_t4_root(7, 41) == 6);
  try {
    fpr_to_t4_root(4, 11);
    FAIL("expected NotAnFpr");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnFpr);
  }
}

TEST_CASE("fpr_report") {
  const auto r = fpr_report(11);
  CHECK(r.residue_class_ok);
  CHECK(r.candidates == std::vector<u64>{4, 8});
  CHECK(r.fprs == std::vector<u64>{8});
  CHECK(r.t4_root == 7u);
  CHECK(r.t4_applicable);
  CHECK_FALSE(r.g4_applicable);

  const auto r29 = fpr_report(29);
  CHECK(r29.residue_class_ok);
  CHECK_FALSE(r29.t4_root.has_value());
  CHECK_FALSE(r29.t4_applicable);

  const auto r7 = fpr_report(7);
  CHECK_FALSE(r7.residue_class_ok);
  CHECK(r7.candidates.empty());
}

TEST_CASE("t4 admissibility and applicability examples") {
  CHECK(t4_admissible(29));
  CHECK_FALSE(t4_applicable(29));
  CHECK(t4_applicable(11));
  CHECK_FALSE(t4_admissible(7));
  for (u64 q : {4u, 5u, 9u}) {
    CHECK(t4_admissible(q));
    CHECK(t4_applicable(q));
  }
  CHECK_THROWS_AS(t4_applicable(12), Error);
}

TEST_CASE("g4 applicability examples") {
  CHECK(g4_applicable(41));
  CHECK_FALSE(g4_applicable(11));
  CHECK_FALSE(g4_applicable(29));
  CHECK(g4_applicable(5));
}

TEST_CASE("fpr_set matches brute force and the shift to a^2 + a = 1 roots, p <= 10^4") {
  for (u64 p : oracle::naive_primes(10'000)) {
    if (p == 2) continue;
    CAPTURE(p);
    const auto fprs = fpr_set(p);
    REQUIRE(fprs == naive_fprs(p));
    // g is an FPR iff g - 1 is a primitive root with a^2 + a = 1.
    std::vector<u64> shifted;
    for (u64 a = 1; a < p; ++a) {
      if ((a * a + a) % p == 1 && oracle::naive_is_primitive(a, p)) shifted.push_back((a + 1) % p);
    }
    std::sort(shifted.begin(), shifted.end());
    REQUIRE(fprs == shifted);
    for (u64 c : fpr_candidates(p)) REQUIRE((c * c) % p == (c + 1) % p);
  }
}

TEST_CASE("candidates exist exactly for p = 5 or p = +-1 mod 10, p <= 10^5") {
  for (u64 p : oracle::naive_primes(100'000)) {
    if (p == 2) continue;
    const bool residue = p == 5 || p % 10 == 1 || p % 10 == 9;
    REQUIRE(!fpr_candidates(p).empty() == residue);
    REQUIRE(t4_admissible(p) == residue);
    if (t4_applicable(p)) REQUIRE(residue);
  }
}

TEST_CASE("t4_applicable over extension fields matches the field search") {
  for (auto [p, k] : oracle::prime_powers_up_to(3000)) {
    const auto f = ff::make_field(p, k);
    bool found = false;
    for (const auto& a : ff::primitive_elements(f)) {
      if ((a * a + a).is_one()) found = true;
    }
    CAPTURE(f.q());
    REQUIRE(t4_applicable(f.q()) == found);
    if (k > 1 && found) REQUIRE((f.q() == 4 || f.q() == 9));
  }
}

TEST_CASE("g4 residue route agrees with exhaustive pair search, q <= 2000") {
  for (auto [p, k] : oracle::prime_powers_up_to(2000)) {
    const u64 q = [&] {
      u64 x = 1;
      for (int i = 0; i < k; ++i) x *= p;
      return x;
    }();
    if (q < 4) continue;
    CAPTURE(q);
    const bool brute = k == 1 ? g4_pair_exists_prime(p) : g4_pair_exists(ff::make_field(p, k));
    REQUIRE(g4_by_residue(q) == brute);
    REQUIRE(g4_by_search(q) == brute);
    REQUIRE(g4_applicable(q) == brute);
  }
}

TEST_CASE("phong_check on every qualifying prime <= 10^4") {
  int qualifying = 0;
  for (u64 p : oracle::naive_primes(10'000)) {
    if (p < 5 || (p % 10 != 1 && p % 10 != 9) || !oracle::naive_is_prime((p - 1) / 2)) continue;
    ++qualifying;
    CAPTURE(p);
    REQUIRE(phong_check(p));
    REQUIRE(naive_fprs(p).size() == 1);
  }
  CHECK(qualifying > 10);
  CHECK(phong_check(11));
  try {
    phong_check(13);
    FAIL("expected PreconditionNotMet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionNotMet);
  }
}
