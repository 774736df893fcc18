#include "costas/ff.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace costas::ff {

namespace {

constexpr u64 kMaxFieldOrder = u64{1} << 31;
constexpr int kMaxDegree = 16;

// Remainder of a (constant term first) modulo a monic divisor, over GF(p).
std::vector<u64> poly_rem(std::vector<u64> a, std::span<const u64> monic, u64 p) {
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const u64 lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - d;
      for (std::size_t i = 0; i < d; ++i) {
        a[shift + i] = (a[shift + i] + (p - mul_mod(lead, monic[i], p))) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool has_root(std::span<const u64> poly, u64 p) {
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) throw Error(ErrorCode::DivisionByZero, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  const i64 mm = static_cast<i64>(m);
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  auto strip = [&](u64 d) {
    if (n % d != 0) return;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  };
  strip(2);
  strip(3);
  for (u64 d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<std::pair<u64, int>> prime_power_decompose(u64 q) {
  if (q < 2) return std::nullopt;
  const auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return std::make_pair(factors[0].prime, factors[0].exponent);
}

u64 order_mod_p(u64 a, u64 p, std::span<const PrimePower> p_minus_1_factors) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::ZeroElement, "order of 0 is undefined");
  u64 n = p - 1;
  for (const auto& [prime, exponent] : p_minus_1_factors) {
    for (int i = 0; i < exponent && pow_mod(a, n / prime, p) == 1; ++i) n /= prime;
  }
  return n;
}

bool is_primitive_root(u64 a, u64 p, std::span<const PrimePower> p_minus_1_factors) {
  a %= p;
  if (a == 0) return false;
  for (const auto& pp : p_minus_1_factors) {
    if (pow_mod(a, (p - 1) / pp.prime, p) == 1) return false;
  }
  return true;
}

std::vector<u64> sqrt_mod_p(u64 a, u64 p) {
  if (p % 2 == 0) throw Error(ErrorCode::EvenModulus, "sqrt_mod_p needs an odd prime, got " + std::to_string(p));
  a %= p;
  if (a == 0) return {0};
  if (pow_mod(a, (p - 1) / 2, p) != 1) return {};

  u64 r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      for (u64 t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
      u64 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  const u64 other = p - r;
  return {std::min(r, other), std::max(r, other)};
}

// ---------------------------------------------------------------------------

bool is_irreducible(std::span<const u64> monic, u64 p) {
  const std::size_t k = monic.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  if (has_root(monic, p)) return false;
  if (k <= 3) return true;
  std::vector<u64> poly(monic.begin(), monic.end());
  for (std::size_t d = 2; d <= k / 2; ++d) {
    u64 count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<u64> divisor(d + 1);
    divisor[d] = 1;
    for (u64 v = 0; v < count; ++v) {
      u64 rest = v;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = rest % p;
        rest /= p;
      }
      const auto rem = poly_rem(poly, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](u64 c) { return c == 0; })) return false;
    }
  }
  return true;
}

Field make_field(u64 p, int k) {
  if (!is_prime(p)) throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxDegree) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(k) + " not in [1, 16]");

  auto data = std::make_shared<Field::Data>();
  data->p = p;
  data->k = k;
  u64 q = 1;
  data->place.push_back(1);
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "p^k exceeds 2^31");
    data->place.push_back(q);
  }
  data->q = q;
  data->factors = factorize(q - 1);

  if (k > 1) {
    std::vector<u64> poly(k + 1);
    poly[k] = 1;
    bool found = false;
    for (u64 v = 0; v < q && !found; ++v) {
      u64 rest = v;
      for (int i = 0; i < k; ++i) {
        poly[i] = rest % p;
        rest /= p;
      }
      found = is_irreducible(poly, p);
    }
    if (!found) throw Error(ErrorCode::NoIrreducibleFound, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    data->modulus = std::move(poly);
  }
  return Field(std::move(data));
}

Field make_field_of_order(u64 q) {
  const auto pk = prime_power_decompose(q);
  if (!pk) throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
  return make_field(pk->first, pk->second);
}

FieldElement Field::element(u64 rep) const {
  return FieldElement(*this, rep);
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

std::vector<u64> Field::decode(u64 rep) const {
  std::vector<u64> coeffs(static_cast<std::size_t>(k()));
  for (auto& c : coeffs) {
    c = rep % p();
    rep /= p();
  }
  return coeffs;
}

u64 Field::encode(std::span<const u64> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(k())) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
  u64 rep = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    rep = rep * p() + coeffs[i];
  }
  return rep;
}

u64 Field::add_rep(u64 a, u64 b) const {
  const u64 p = data_->p;
  if (data_->k == 1) return (a + b) % p;
  u64 out = 0;
  for (int i = 0; i < data_->k; ++i) {
    out += ((a % p + b % p) % p) * data_->place[i];
    a /= p;
    b /= p;
  }
  return out;
}

u64 Field::neg_rep(u64 a) const {
  const u64 p = data_->p;
  if (data_->k == 1) return a == 0 ? 0 : p - a;
  u64 out = 0;
  for (int i = 0; i < data_->k; ++i) {
    out += ((p - a % p) % p) * data_->place[i];
    a /= p;
  }
  return out;
}

u64 Field::sub_rep(u64 a, u64 b) const { return add_rep(a, neg_rep(b)); }

u64 Field::mul_rep(u64 a, u64 b) const {
  const u64 p = data_->p;
  const int k = data_->k;
  if (k == 1) return mul_mod(a, b, p);

  std::array<u64, kMaxDegree> x{}, y{};
  std::array<u64, 2 * kMaxDegree - 1> prod{};
  for (int i = 0; i < k; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p)) % p;
  }
  const auto& m = data_->modulus;
  for (int d = 2 * k - 2; d >= k; --d) {
    const u64 lead = prod[d];
    if (lead == 0) continue;
    for (int i = 0; i < k; ++i) {
      prod[d - k + i] = (prod[d - k + i] + p - mul_mod(lead, m[i], p)) % p;
    }
    prod[d] = 0;
  }
  u64 out = 0;
  for (int i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

u64 Field::pow_rep(u64 a, u64 exp) const {
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_rep(result, a);
    a = mul_rep(a, a);
    exp >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Field field, u64 rep) : field_(std::move(field)), rep_(rep) {
  if (rep_ >= field_.q()) {
    throw Error(ErrorCode::InvalidArgument, "rep " + std::to_string(rep) + " outside GF(" + std::to_string(field_.q()) + ")");
  }
}

namespace {

const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, "GF(" + std::to_string(a.field().q()) + ") vs GF(" + std::to_string(b.field().q()) + ")");
  }
  return a.field();
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add_rep(a.rep(), b.rep()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub_rep(a.rep(), b.rep()));
}

FieldElement neg(const FieldElement& a) { return FieldElement(a.field(), a.field().neg_rep(a.rep())); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul_rep(a.rep(), b.rep()));
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  const Field& f = a.field();
  if (f.k() == 1) return FieldElement(f, inv_mod(a.rep(), f.p()));
  return FieldElement(f, f.pow_rep(a.rep(), f.q() - 2));
}

FieldElement pow(const FieldElement& a, i64 exp) {
  const Field& f = a.field();
  if (a.is_zero()) {
    if (exp < 0) throw Error(ErrorCode::DivisionByZero, "negative power of 0");
    return exp == 0 ? f.one() : f.zero();
  }
  const i64 n = static_cast<i64>(f.q() - 1);
  const i64 reduced = ((exp % n) + n) % n;
  return FieldElement(f, f.pow_rep(a.rep(), static_cast<u64>(reduced)));
}

u64 multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "order of 0 is undefined");
  const Field& f = a.field();
  u64 n = f.q() - 1;
  for (const auto& [prime, exponent] : f.group_order_factors()) {
    for (int i = 0; i < exponent && f.pow_rep(a.rep(), n / prime) == 1; ++i) n /= prime;
  }
  return n;
}

bool is_primitive(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "primitivity of 0 is undefined");
  const Field& f = a.field();
  for (const auto& pp : f.group_order_factors()) {
    if (f.pow_rep(a.rep(), (f.q() - 1) / pp.prime) == 1) return false;
  }
  return true;
}

std::vector<FieldElement> primitive_elements(const Field& field) {
  if (field.q() > kMaxEnumerableField) {
    throw Error(ErrorCode::FieldTooLarge, "q = " + std::to_string(field.q()) + " exceeds 10^6");
  }
  std::vector<FieldElement> out;
  for (u64 rep = 1; rep < field.q(); ++rep) {
    FieldElement x(field, rep);
    if (is_primitive(x)) out.push_back(std::move(x));
  }
  return out;
}

FieldElement first_primitive_element(const Field& field) {
  for (u64 rep = 1; rep < field.q(); ++rep) {
    FieldElement x(field, rep);
    if (is_primitive(x)) return x;
  }
  throw Error(ErrorCode::InternalInconsistency, "no generator found");
}

LogTable::LogTable(const FieldElement& base) : base_(base) {
  const Field& f = base.field();
  if (f.q() > kMaxEnumerableField) throw Error(ErrorCode::FieldTooLarge, "log table needs q <= 10^6");
  if (base.is_zero() || !is_primitive(base)) {
    throw Error(ErrorCode::NotPrimitive, std::to_string(base.rep()) + " does not generate GF(" + std::to_string(f.q()) + ")*");
  }
  const u64 n = f.q() - 1;
  logs_.assign(f.q(), 0);
  powers_.resize(n);
  u64 x = 1;
  for (u64 i = 0; i < n; ++i) {
    powers_[i] = static_cast<std::uint32_t>(x);
    logs_[x] = static_cast<std::uint32_t>(i == 0 ? n : i);
    x = f.mul_rep(x, base.rep());
  }
}

u64 LogTable::at(u64 rep) const {
  if (rep == 0 || rep >= logs_.size()) throw Error(ErrorCode::ZeroElement, "log of 0 or out-of-range rep");
  return logs_[rep];
}

u64 LogTable::at(const FieldElement& x) const {
  if (!(x.field() == base_.field())) throw Error(ErrorCode::FieldMismatch, "log of element from another field");
  return at(x.rep());
}

LogTable log_table(const FieldElement& alpha) { return LogTable(alpha); }

}  // namespace costas::ff
