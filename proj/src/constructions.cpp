#include "costas/constructions.hpp"

#include <string>

namespace costas::construct {

using ff::Field;
using ff::FieldElement;
using ff::u64;

namespace {

// Variant outputs are checked against the verifier up to this side length;
// beyond it the O(N^2) check dominates construction cost.
constexpr int kValidateLimit = 8192;

std::string field_name(const Field& f) { return "GF(" + std::to_string(f.q()) + ")"; }

void require_primitive(const FieldElement& a, std::string_view name) {
  if (a.is_zero() || !ff::is_primitive(a)) {
    throw Error(ErrorCode::NotPrimitive,
                std::string(name) + " = " + std::to_string(a.rep()) + " is not primitive in " + field_name(a.field()));
  }
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "alpha and beta live in different fields");
}

void require_prime_field(const FieldElement& g, u64 min_p) {
  const Field& f = g.field();
  if (f.k() != 1) throw Error(ErrorCode::InvalidArgument, "Welch constructions need a prime field, got " + field_name(f));
  if (f.p() < min_p) throw Error(ErrorCode::DegenerateSize, "Welch construction needs p >= " + std::to_string(min_p));
}

void require_lempel_size(const Field& f) {
  if (f.q() < 4) throw Error(ErrorCode::DegenerateSize, field_name(f) + " is too small; need q >= 4");
}

CostasCandidate validated(CostasCandidate c, std::string_view what) {
  if (c.size() <= kValidateLimit && !is_costas(c)) {
    throw Error(ErrorCode::InternalInconsistency, std::string(what) + " produced a non-Costas array");
  }
  return c;
}

bool sums_to_one(const FieldElement& a, const FieldElement& b) { return (a + b).is_one(); }

bool g4_second_equation(const FieldElement& alpha, const FieldElement& beta) {
  return (alpha * alpha + ff::inv(beta)).is_one();
}

bool t4_equation(const FieldElement& alpha) { return (alpha * alpha + alpha).is_one(); }

}  // namespace

std::string_view method_tag(Method m) {
  switch (m) {
    case Method::W1: return "w1";
    case Method::W2: return "w2";
    case Method::L2: return "l2";
    case Method::G2: return "g2";
    case Method::G3: return "g3";
    case Method::G4Char2: return "g4c2";
    case Method::T4: return "t4";
    case Method::G4: return "g4";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view tag) {
  for (Method m : kAllMethods) {
    if (method_tag(m) == tag) return m;
  }
  return std::nullopt;
}

bool uses_beta(Method m) {
  return m == Method::G2 || m == Method::G3 || m == Method::G4Char2 || m == Method::G4;
}

int output_size(Method m, u64 q) {
  const int iq = static_cast<int>(q);
  switch (m) {
    case Method::W1: return iq - 1;
    case Method::W2: return iq - 2;
    case Method::L2:
    case Method::G2: return iq - 2;
    case Method::G3: return iq - 3;
    case Method::G4Char2:
    case Method::T4:
    case Method::G4: return iq - 4;
  }
  return -1;
}

CostasCandidate welch_w1(const FieldElement& g) {
  require_prime_field(g, 3);
  require_primitive(g, "g");
  const u64 p = g.field().p();
  std::vector<int> perm;
  perm.reserve(p - 1);
  u64 x = 1;
  for (u64 i = 1; i <= p - 1; ++i) {
    x = ff::mul_mod(x, g.rep(), p);
    perm.push_back(static_cast<int>(x));
  }
  return CostasCandidate(std::move(perm));
}

CostasCandidate welch_w2(const FieldElement& g) {
  require_prime_field(g, 5);
  // g^(p-1) = 1 puts the last column's dot in row 1.
  return remove_last_column_bottom_row(welch_w1(g));
}

CostasCandidate golomb_g2(const FieldElement& alpha, const FieldElement& beta) {
  require_same_field(alpha, beta);
  const Field& f = alpha.field();
  require_lempel_size(f);
  require_primitive(alpha, "alpha");
  require_primitive(beta, "beta");

  const ff::LogTable log_beta(beta);
  const u64 n = f.q() - 2;
  std::vector<int> perm;
  perm.reserve(n);
  u64 power = 1;
  for (u64 i = 1; i <= n; ++i) {
    power = f.mul_rep(power, alpha.rep());
    perm.push_back(static_cast<int>(log_beta.at(f.sub_rep(1, power))));
  }
  return CostasCandidate(std::move(perm));
}

CostasCandidate lempel_l2(const FieldElement& alpha) { return golomb_g2(alpha, alpha); }

CostasCandidate golomb_g3(const FieldElement& alpha, const FieldElement& beta) {
  require_same_field(alpha, beta);
  require_lempel_size(alpha.field());
  require_primitive(alpha, "alpha");
  require_primitive(beta, "beta");
  if (!sums_to_one(alpha, beta)) {
    throw Error(ErrorCode::CornerConditionFailed,
                "alpha + beta != 1 (" + std::to_string(alpha.rep()) + " + " + std::to_string(beta.rep()) + ")");
  }
  return remove_leading(golomb_g2(alpha, beta), 1);
}

CostasCandidate golomb_g4_char2(const FieldElement& alpha, const FieldElement& beta) {
  require_same_field(alpha, beta);
  const Field& f = alpha.field();
  if (f.p() != 2 || f.k() < 3) throw Error(ErrorCode::WrongCharacteristic, field_name(f) + " is not GF(2^k) with k >= 3");
  require_primitive(alpha, "alpha");
  require_primitive(beta, "beta");
  if (!sums_to_one(alpha, beta)) throw Error(ErrorCode::CornerConditionFailed, "alpha + beta != 1");
  // (alpha + beta)^2 = alpha^2 + beta^2 = 1 adds the dot (2, 2).
  return validated(remove_leading(golomb_g2(alpha, beta), 2), "g4c2");
}

CostasCandidate taylor_t4(const FieldElement& alpha) {
  require_lempel_size(alpha.field());
  require_primitive(alpha, "alpha");
  if (!t4_equation(alpha)) throw Error(ErrorCode::T4ConditionFailed, "alpha^2 + alpha != 1");
  // Dots (1, 2) and (2, 1) close the leading 2x2 block.
  return validated(remove_leading(lempel_l2(alpha), 2), "t4");
}

CostasCandidate golomb_g4(const FieldElement& alpha, const FieldElement& beta) {
  require_same_field(alpha, beta);
  require_lempel_size(alpha.field());
  if (beta.is_zero()) throw Error(ErrorCode::NotPrimitive, "beta = 0 is not primitive");
  if (!sums_to_one(alpha, beta)) throw Error(ErrorCode::G4ConditionFailed, "alpha + beta != 1");
  if (!g4_second_equation(alpha, beta)) throw Error(ErrorCode::G4ConditionFailed, "alpha^2 + beta^-1 != 1");
  require_primitive(alpha, "alpha");
  require_primitive(beta, "beta");
  // alpha + beta = 1 is the dot (1, 1); alpha^2 + beta^(q-2) = 1 is the dot
  // (2, q-2), which becomes column 1 / top row once (1, 1) is gone.
  const auto g3 = remove_leading(golomb_g2(alpha, beta), 1);
  return validated(remove_first_column_top_row(g3), "g4");
}

CostasCandidate build(const ConstructionSpec& spec) {
  auto need_beta = [&]() -> const FieldElement& {
    if (!spec.beta) throw Error(ErrorCode::InvalidArgument, std::string(method_tag(spec.method)) + " needs beta");
    return *spec.beta;
  };
  switch (spec.method) {
    case Method::W1: return welch_w1(spec.alpha);
    case Method::W2: return welch_w2(spec.alpha);
    case Method::L2: return lempel_l2(spec.alpha);
    case Method::G2: return golomb_g2(spec.alpha, need_beta());
    case Method::G3: return golomb_g3(spec.alpha, need_beta());
    case Method::G4Char2: return golomb_g4_char2(spec.alpha, need_beta());
    case Method::T4: return taylor_t4(spec.alpha);
    case Method::G4: return golomb_g4(spec.alpha, need_beta());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

std::optional<ConstructionSpec> find_spec(Method method, const Field& field) {
  const u64 q = field.q();
  auto make = [&](FieldElement alpha, std::optional<FieldElement> beta) {
    return ConstructionSpec{method, field, std::move(alpha), std::move(beta)};
  };
  // Ascending alpha with beta = 1 - alpha; the predicate sees (alpha, beta).
  auto search_pair = [&](auto&& accept) -> std::optional<ConstructionSpec> {
    for (u64 rep = 2; rep < q; ++rep) {
      FieldElement alpha(field, rep);
      FieldElement beta = field.one() - alpha;
      if (beta.is_zero() || !accept(alpha, beta)) continue;
      if (ff::is_primitive(alpha) && ff::is_primitive(beta)) return make(alpha, beta);
    }
    return std::nullopt;
  };

  switch (method) {
    case Method::W1:
    case Method::W2:
      if (field.k() != 1 || field.p() < (method == Method::W1 ? 3u : 5u)) return std::nullopt;
      return make(ff::first_primitive_element(field), std::nullopt);
    case Method::L2:
      if (q < 4) return std::nullopt;
      return make(ff::first_primitive_element(field), std::nullopt);
    case Method::G2: {
      if (q < 4) return std::nullopt;
      auto g = ff::first_primitive_element(field);
      return make(g, g);
    }
    case Method::G3:
      if (q < 4) return std::nullopt;
      return search_pair([](const FieldElement&, const FieldElement&) { return true; });
    case Method::G4Char2:
      if (field.p() != 2 || field.k() < 3) return std::nullopt;
      return search_pair([](const FieldElement&, const FieldElement&) { return true; });
    case Method::T4:
      if (q < 4) return std::nullopt;
      for (u64 rep = 2; rep < q; ++rep) {
        FieldElement alpha(field, rep);
        if (t4_equation(alpha) && ff::is_primitive(alpha)) return make(alpha, std::nullopt);
      }
      return std::nullopt;
    case Method::G4:
      if (q < 4) return std::nullopt;
      return search_pair(g4_second_equation);
  }
  return std::nullopt;
}

std::string inapplicable_reason(Method method, const Field& field) {
  const std::string tag(method_tag(method));
  const u64 q = field.q();
  switch (method) {
    case Method::W1:
    case Method::W2:
      if (field.k() != 1) return tag + ": q must be prime";
      return tag + ": p too small";
    case Method::L2:
    case Method::G2: return tag + ": q must be >= 4";
    case Method::G3:
      if (q < 4) return tag + ": q must be >= 4";
      return tag + ": no primitive pair with a+b=1";
    case Method::G4Char2:
      if (field.p() != 2 || field.k() < 3) return tag + ": q must be 2^k with k >= 3";
      return tag + ": no primitive pair with a+b=1";
    case Method::T4:
      if (q < 4) return tag + ": q must be >= 4";
      return tag + ": no primitive root with a^2+a=1";
    case Method::G4:
      if (q < 4) return tag + ": q must be >= 4";
      return tag + ": no primitive pair with a+b=1 and a^2+b^-1=1";
  }
  return tag + ": inapplicable";
}

}  // namespace costas::construct
