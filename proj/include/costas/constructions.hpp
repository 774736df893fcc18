#pragma once

// Algebraic Costas constructions over finite fields.
//
// Coordinates: column i, row f(i), both 1-based. Welch arrays use the
// exponential form f(i) = g^i; Lempel/Golomb arrays use the logarithmic form
// f(i) = log_beta(1 - alpha^i), i.e. a dot at (i, j) iff alpha^i + beta^j = 1.
// The q-3 and q-4 variants strip corner dots from the Golomb array.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costas/array.hpp"
#include "costas/ff.hpp"

namespace costas::construct {

enum class Method { W1, W2, L2, G2, G3, G4Char2, T4, G4 };

inline constexpr Method kAllMethods[] = {Method::W1, Method::W2, Method::L2, Method::G2,
                                         Method::G3, Method::G4Char2, Method::T4, Method::G4};

/// Lower-case tag used on the command line and in array documents.
std::string_view method_tag(Method m);
std::optional<Method> parse_method(std::string_view tag);

bool uses_beta(Method m);

/// Side length the method produces over GF(q).
int output_size(Method m, ff::u64 q);

struct ConstructionSpec {
  Method method;
  ff::Field field;
  ff::FieldElement alpha;
  std::optional<ff::FieldElement> beta;
};

CostasCandidate welch_w1(const ff::FieldElement& g);
CostasCandidate welch_w2(const ff::FieldElement& g);
CostasCandidate lempel_l2(const ff::FieldElement& alpha);
CostasCandidate golomb_g2(const ff::FieldElement& alpha, const ff::FieldElement& beta);
CostasCandidate golomb_g3(const ff::FieldElement& alpha, const ff::FieldElement& beta);
CostasCandidate golomb_g4_char2(const ff::FieldElement& alpha, const ff::FieldElement& beta);
CostasCandidate taylor_t4(const ff::FieldElement& alpha);
CostasCandidate golomb_g4(const ff::FieldElement& alpha, const ff::FieldElement& beta);

CostasCandidate build(const ConstructionSpec& spec);

/// First parameter set (ascending alpha, then beta) meeting the method's
/// preconditions over the field, or nullopt when the method does not apply.
std::optional<ConstructionSpec> find_spec(Method method, const ff::Field& field);

/// Short human-readable reason a method is inapplicable, e.g.
/// "t4: no primitive root with a^2+a=1".
std::string inapplicable_reason(Method method, const ff::Field& field);

}  // namespace costas::construct
