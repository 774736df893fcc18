#pragma once

// Fibonacci primitive roots (primitive g with g^2 = g + 1 mod p) and the
// applicability predicates for the q-4 Lempel and Golomb variants.
//
// g is an FPR iff g - 1 is a primitive root with a^2 + a = 1, so the T4
// variant exists over GF(p) exactly when p has an FPR.

#include <optional>
#include <vector>

#include "costas/ff.hpp"

namespace costas::fpr {

using ff::u64;

struct FprReport {
  u64 p = 0;
  bool residue_class_ok = false;  // p = 5 or p = +-1 mod 10
  std::vector<u64> candidates;    // roots of x^2 - x - 1 mod p
  std::vector<u64> fprs;          // primitive members of candidates
  std::optional<u64> t4_root;     // smallest fpr minus one
  bool t4_applicable = false;
  bool g4_applicable = false;
};

/// Roots of x^2 - x - 1 mod an odd prime, ascending (one double root at p = 5).
std::vector<u64> fpr_candidates(u64 p);

/// Fibonacci primitive roots mod an odd prime, ascending.
std::vector<u64> fpr_set(u64 p);

/// Same, with the factorization of p - 1 supplied; skips the primality check.
std::vector<u64> fpr_set_unchecked(u64 p, std::span<const ff::PrimePower> p_minus_1_factors);

u64 fpr_to_t4_root(u64 g, u64 p);

FprReport fpr_report(u64 p);

/// Necessary condition: q in {4, 5, 9} or q a prime = +-1 mod 10.
bool t4_admissible(u64 q);

/// Existence of a primitive alpha in GF(q) with alpha^2 + alpha = 1.
bool t4_applicable(u64 q);

/// q in {4, 5, 9}, or q prime with an FPR and q = 1, 9 mod 20. Cross-checked
/// against a direct search for a primitive pair; throws InternalInconsistency
/// if the two disagree.
bool g4_applicable(u64 q);

/// Residue-class route alone (no cross-check).
bool g4_by_residue(u64 q);

/// Direct route: some primitive alpha with beta = 1 - alpha primitive and
/// alpha^2 + beta^-1 = 1. Uses the reduction of the two equations to
/// alpha^2 = alpha + 1, so only the roots of that quadratic are tried.
bool g4_by_search(u64 q);

/// For p = 1, 9 mod 10 with (p - 1)/2 prime: true iff p has exactly one FPR.
bool phong_check(u64 p);

}  // namespace costas::fpr
