#include "costas/io.hpp"

#include <charconv>
#include <string>

#include "json.hpp"

namespace costas::io {

using json = nlohmann::ordered_json;

ArrayDocument make_document(const construct::ConstructionSpec& spec, const CostasCandidate& array) {
  ArrayDocument doc;
  doc.n = array.size();
  doc.perm = array.perm();
  doc.method = std::string(construct::method_tag(spec.method));
  doc.q = spec.field.q();
  doc.params.emplace_back("alpha", spec.alpha.rep());
  if (spec.beta) doc.params.emplace_back("beta", spec.beta->rep());
  return doc;
}

ArrayDocument external_document(const CostasCandidate& array) {
  ArrayDocument doc;
  doc.n = array.size();
  doc.perm = array.perm();
  return doc;
}

std::string to_json(const ArrayDocument& doc) {
  json j;
  j["format"] = kFormatVersion;
  j["n"] = doc.n;
  j["perm"] = doc.perm;
  j["method"] = doc.method;
  if (doc.q) j["q"] = *doc.q;
  json params = json::object();
  for (const auto& [name, value] : doc.params) params[name] = value;
  j["params"] = params;
  return j.dump();
}

ArrayDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "document must be a JSON object");
    if (j.contains("format") && j.at("format").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::InvalidArgument, "unsupported format " + j.at("format").dump());
    }
    ArrayDocument doc;
    doc.perm = j.at("perm").get<std::vector<int>>();
    doc.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(doc.perm.size());
    if (doc.n != static_cast<int>(doc.perm.size())) {
      throw Error(ErrorCode::InvalidArgument, "n = " + std::to_string(doc.n) + " but perm has " + std::to_string(doc.perm.size()) + " entries");
    }
    if (j.contains("method")) doc.method = j.at("method").get<std::string>();
    if (j.contains("q")) doc.q = j.at("q").get<std::uint64_t>();
    if (j.contains("params")) {
      const auto& params = j.at("params");
      for (const char* key : {"alpha", "beta"}) {
        if (params.contains(key)) doc.params.emplace_back(key, params.at(key).get<std::uint64_t>());
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad document: ") + e.what());
  }
}

CostasCandidate candidate_of(const ArrayDocument& doc) { return CostasCandidate(doc.perm); }

construct::ConstructionSpec spec_of(const ArrayDocument& doc) {
  const auto method = construct::parse_method(doc.method);
  if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method '" + doc.method + "'");
  if (!doc.q) throw Error(ErrorCode::InvalidArgument, "document has no q");
  const auto field = ff::make_field_of_order(*doc.q);
  std::optional<ff::FieldElement> alpha, beta;
  for (const auto& [name, value] : doc.params) {
    if (value >= field.q()) throw Error(ErrorCode::InvalidArgument, name + " outside GF(q)");
    (name == "alpha" ? alpha : beta) = field.element(value);
  }
  if (!alpha) throw Error(ErrorCode::InvalidArgument, "document has no alpha");
  return construct::ConstructionSpec{*method, field, *alpha, beta};
}

std::optional<CostasCandidate> replay(const ArrayDocument& doc) {
  if (doc.method == kExternalMethod) return std::nullopt;
  return construct::build(spec_of(doc));
}

namespace {

template <typename T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    T value{};
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse '" + std::string(token) + "' in list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) { return parse_list<int>(text); }
std::vector<std::uint64_t> parse_u64_list(std::string_view text) { return parse_list<std::uint64_t>(text); }

std::string fixed6(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  return std::string(buf, end);
}

std::string census_csv(const density::CensusResult& result) {
  std::string out = "# format=" + std::to_string(kFormatVersion) + "\n";
  out += kCensusHeader;
  out += '\n';
  for (const auto& row : result.rows) {
    out += std::to_string(row.x) + ',' + std::to_string(row.count) + ',' + std::to_string(row.pi_x) + ',' + fixed6(row.ratio) + ',';
    if (row.predicted) out += fixed6(*row.predicted);
    out += '\n';
  }
  return out;
}

}  // namespace costas::io
