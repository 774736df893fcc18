#pragma once

// On-disk formats: array documents (JSON) and census tables (CSV).
//
//   {"format":1,"n":7,"perm":[3,6,1,7,5,2,4],"method":"t4","q":11,"params":{"alpha":7}}
//
//   # format=1
//   x,count,pi_x,ratio,predicted
//   1000,46,168,0.273810,0.265730

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "costas/array.hpp"
#include "costas/constructions.hpp"
#include "costas/density.hpp"

namespace costas::io {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kExternalMethod = "external";

struct ArrayDocument {
  int n = 0;
  std::vector<int> perm;
  std::string method{kExternalMethod};
  std::optional<std::uint64_t> q;
  std::vector<std::pair<std::string, std::uint64_t>> params;  // alpha, then beta

  friend bool operator==(const ArrayDocument&, const ArrayDocument&) = default;
};

ArrayDocument make_document(const construct::ConstructionSpec& spec, const CostasCandidate& array);
ArrayDocument external_document(const CostasCandidate& array);

/// Single-line JSON, keys in the documented order.
std::string to_json(const ArrayDocument& doc);

/// Throws InvalidArgument on malformed input or an unsupported format.
ArrayDocument parse_document(std::string_view json);

/// Throws NotAPermutation if perm is not a permutation of 1..n.
CostasCandidate candidate_of(const ArrayDocument& doc);

/// Rebuilds the array from (method, q, params); nullopt for external documents.
std::optional<CostasCandidate> replay(const ArrayDocument& doc);

construct::ConstructionSpec spec_of(const ArrayDocument& doc);

/// "2,4,3,1" -> {2, 4, 3, 1}. Throws InvalidArgument.
std::vector<int> parse_int_list(std::string_view text);
std::vector<std::uint64_t> parse_u64_list(std::string_view text);

/// Fixed-point with 6 decimals, independent of the C++ locale.
std::string fixed6(double value);

inline constexpr std::string_view kCensusHeader = "x,count,pi_x,ratio,predicted";

/// "# format=1" line, header, one row per checkpoint; LF line endings.
std::string census_csv(const density::CensusResult& result);

}  // namespace costas::io
