#pragma once

// Finite fields GF(p) and GF(p^k) for k <= 16, q <= 2^31.
//
// Elements are stored by their canonical integer encoding: the coefficient
// vector of the polynomial representative written in base p with the
// constant term least significant. For k = 1 this is the residue itself.
// Ordering of elements is by that encoding, which gives every search in the
// library ("first primitive root", "first admissible pair") a reproducible
// answer.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "costas/error.hpp"

namespace costas::ff {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// ---------------------------------------------------------------------------
// Machine-integer number theory. Moduli are below 2^32, so products fit in
// 64 bits.

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inv_mod(u64 a, u64 m);
bool is_prime(u64 n);
std::vector<PrimePower> factorize(u64 n);

/// If q = p^k with p prime and k >= 1, returns (p, k).
std::optional<std::pair<u64, int>> prime_power_decompose(u64 q);

u64 order_mod_p(u64 a, u64 p, std::span<const PrimePower> p_minus_1_factors);
bool is_primitive_root(u64 a, u64 p, std::span<const PrimePower> p_minus_1_factors);

/// Square roots of a modulo an odd prime p, ascending: {} for a non-residue,
/// {0} for a = 0, {r, p - r} otherwise. Tonelli-Shanks with the p = 3 mod 4
/// shortcut.
std::vector<u64> sqrt_mod_p(u64 a, u64 p);

// ---------------------------------------------------------------------------

class FieldElement;

class Field {
 public:
  u64 p() const { return data_->p; }
  int k() const { return data_->k; }
  u64 q() const { return data_->q; }

  /// Monic defining polynomial, constant term first, size k + 1. Empty for
  /// prime fields.
  const std::vector<u64>& modulus() const { return data_->modulus; }

  /// Factorization of q - 1, ascending by prime.
  const std::vector<PrimePower>& group_order_factors() const { return data_->factors; }

  FieldElement element(u64 rep) const;
  FieldElement zero() const;
  FieldElement one() const;

  std::vector<u64> decode(u64 rep) const;
  u64 encode(std::span<const u64> coeffs) const;

  // Internal arithmetic on encodings; no range checks.
  u64 add_rep(u64 a, u64 b) const;
  u64 sub_rep(u64 a, u64 b) const;
  u64 neg_rep(u64 a) const;
  u64 mul_rep(u64 a, u64 b) const;
  u64 pow_rep(u64 a, u64 exp) const;

  /// Fields are equal when (p, k) agree; the modulus is a function of both.
  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ || (a.p() == b.p() && a.k() == b.k());
  }

 private:
  struct Data {
    u64 p;
    int k;
    u64 q;
    std::vector<u64> modulus;
    std::vector<PrimePower> factors;
    std::vector<u64> place;  // p^i, i = 0..k
  };

  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend Field make_field(u64 p, int k);
};

/// Builds GF(p^k). For k > 1 the modulus is the monic irreducible polynomial
/// of degree k whose base-p encoding is smallest.
Field make_field(u64 p, int k = 1);

/// Builds GF(q) for a prime power q.
Field make_field_of_order(u64 q);

/// True iff the monic polynomial (constant term first) is irreducible over GF(p).
/// Root check for degree <= 3, trial division by monic factors otherwise.
bool is_irreducible(std::span<const u64> monic, u64 p);

class FieldElement {
 public:
  FieldElement(Field field, u64 rep);

  const Field& field() const { return field_; }
  u64 rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }
  bool is_one() const { return rep_ == 1; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.rep_ == b.rep_ && a.field_ == b.field_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Field field_;
  u64 rep_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

/// Square-and-multiply. Negative exponents invert first; for nonzero bases
/// the exponent is reduced modulo q - 1. pow(0, 0) = 1.
FieldElement pow(const FieldElement& a, i64 exp);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }

/// Least n >= 1 with a^n = 1, found by stripping prime factors off q - 1.
u64 multiplicative_order(const FieldElement& a);
bool is_primitive(const FieldElement& a);

/// Generators of GF(q)*, ascending by encoding. Requires q <= 10^6.
std::vector<FieldElement> primitive_elements(const Field& field);

/// Smallest generator of GF(q)*.
FieldElement first_primitive_element(const Field& field);

inline constexpr u64 kMaxEnumerableField = 1'000'000;

/// Discrete logarithms to a primitive base: at(alpha^i) = i for i = 1..q-1,
/// so the identity maps to q - 1.
class LogTable {
 public:
  explicit LogTable(const FieldElement& base);

  const FieldElement& base() const { return base_; }
  u64 at(u64 rep) const;
  u64 at(const FieldElement& x) const;

  /// alpha^i for i = 0..q-2.
  u64 exp(u64 i) const { return powers_[i % powers_.size()]; }

 private:
  FieldElement base_;
  std::vector<std::uint32_t> logs_;
  std::vector<std::uint32_t> powers_;
};

LogTable log_table(const FieldElement& alpha);

}  // namespace costas::ff
