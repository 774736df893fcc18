#include "costas/fpr.hpp"

#include <algorithm>
#include <string>

namespace costas::fpr {

namespace {

void require_odd_prime(u64 p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is excluded");
  if (!ff::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

std::vector<u64> candidates_unchecked(u64 p) {
  const u64 half = (p + 1) / 2;  // inverse of 2
  std::vector<u64> out;
  for (u64 s : ff::sqrt_mod_p(5 % p, p)) out.push_back(ff::mul_mod((1 + s) % p, half, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<u64, int> require_prime_power(u64 q) {
  const auto pk = ff::prime_power_decompose(q);
  if (!pk) throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
  return *pk;
}

// Elements of GF(q), q = p^k with k > 1, satisfying pred; ascending.
template <typename Pred>
bool any_element(const ff::Field& f, Pred&& pred) {
  if (f.q() > ff::kMaxEnumerableField) throw Error(ErrorCode::FieldTooLarge, "GF(" + std::to_string(f.q()) + ") is too large to search");
  for (u64 rep = 2; rep < f.q(); ++rep) {
    if (pred(ff::FieldElement(f, rep))) return true;
  }
  return false;
}

}  // namespace

std::vector<u64> fpr_candidates(u64 p) {
  require_odd_prime(p);
  return candidates_unchecked(p);
}

std::vector<u64> fpr_set_unchecked(u64 p, std::span<const ff::PrimePower> p_minus_1_factors) {
  std::vector<u64> out;
  for (u64 g : candidates_unchecked(p)) {
    if (ff::is_primitive_root(g, p, p_minus_1_factors)) out.push_back(g);
  }
  return out;
}

std::vector<u64> fpr_set(u64 p) {
  require_odd_prime(p);
  const auto factors = ff::factorize(p - 1);
  return fpr_set_unchecked(p, factors);
}

u64 fpr_to_t4_root(u64 g, u64 p) {
  const auto set = fpr_set(p);
  if (std::find(set.begin(), set.end(), g % p) == set.end()) {
    throw Error(ErrorCode::NotAnFpr, std::to_string(g) + " is not a Fibonacci primitive root mod " + std::to_string(p));
  }
  return (g % p + p - 1) % p;
}

FprReport fpr_report(u64 p) {
  require_odd_prime(p);
  FprReport r;
  r.p = p;
  r.residue_class_ok = p == 5 || p % 10 == 1 || p % 10 == 9;
  r.candidates = candidates_unchecked(p);
  r.fprs = fpr_set(p);
  if (!r.fprs.empty()) r.t4_root = fpr_to_t4_root(r.fprs.front(), p);
  r.t4_applicable = !r.fprs.empty();
  r.g4_applicable = g4_applicable(p);
  return r;
}

bool t4_admissible(u64 q) {
  const auto [p, k] = require_prime_power(q);
  if (q == 4 || q == 5 || q == 9) return true;
  return k == 1 && (p % 10 == 1 || p % 10 == 9);
}

bool t4_applicable(u64 q) {
  const auto [p, k] = require_prime_power(q);
  if (k == 1) return p != 2 && !fpr_set(p).empty();
  const auto f = ff::make_field(p, k);
  return any_element(f, [](const ff::FieldElement& a) { return (a * a + a).is_one() && ff::is_primitive(a); });
}

bool g4_by_residue(u64 q) {
  const auto [p, k] = require_prime_power(q);
  if (q == 4 || q == 5 || q == 9) return true;
  return k == 1 && (q % 20 == 1 || q % 20 == 9) && t4_applicable(q);
}

bool g4_by_search(u64 q) {
  const auto [p, k] = require_prime_power(q);
  if (q == 2) return false;
  auto pair_ok = [](const ff::FieldElement& alpha) {
    const auto one = alpha.field().one();
    const auto beta = one - alpha;
    if (beta.is_zero() || !ff::is_primitive(alpha) || !ff::is_primitive(beta)) return false;
    return (alpha * alpha + ff::inv(beta)).is_one();
  };
  const auto f = ff::make_field(p, k);
  if (k == 1) {
    for (u64 a : candidates_unchecked(p)) {
      if (a != 0 && pair_ok(f.element(a))) return true;
    }
    return false;
  }
  return any_element(f, [&](const ff::FieldElement& a) { return (a * a - a).is_one() && pair_ok(a); });
}

bool g4_applicable(u64 q) {
  const bool by_residue = g4_by_residue(q);
  const bool by_search = g4_by_search(q);
  if (by_residue != by_search) {
    throw Error(ErrorCode::InternalInconsistency,
                "G4 applicability for q = " + std::to_string(q) + ": residue rule says " + (by_residue ? "yes" : "no") +
                    ", direct search says " + (by_search ? "yes" : "no"));
  }
  return by_residue;
}

bool phong_check(u64 p) {
  if (!ff::is_prime(p) || (p % 10 != 1 && p % 10 != 9) || !ff::is_prime((p - 1) / 2)) {
    throw Error(ErrorCode::PreconditionNotMet, std::to_string(p) + " is not a prime = 1, 9 mod 10 with (p-1)/2 prime");
  }
  return fpr_set(p).size() == 1;
}

}  // namespace costas::fpr
