#include <doctest.h>

#include "costas/io.hpp"

using namespace costas;
using namespace costas::io;

TEST_CASE("array document layout") {
  const auto field = ff::make_field(11);
  const construct::ConstructionSpec spec{construct::Method::T4, field, field.element(7), std::nullopt};
  const auto doc = make_document(spec, construct::build(spec));
  CHECK(to_json(doc) == R"({"format":1,"n":7,"perm":[3,6,1,7,5,2,4],"method":"t4","q":11,"params":{"alpha":7}})");

  const auto ext = external_document(CostasCandidate({2, 4, 3, 1}));
  CHECK(to_json(ext) == R"({"format":1,"n":4,"perm":[2,4,3,1],"method":"external","params":{}})");
  CHECK_FALSE(replay(ext).has_value());
}

TEST_CASE("documents round trip and replay for every applicable method, q <= 256") {
  for (ff::u64 q = 3; q <= 256; ++q) {
    if (!ff::prime_power_decompose(q)) continue;
    const auto field = ff::make_field_of_order(q);
    for (auto m : construct::kAllMethods) {
      const auto spec = construct::find_spec(m, field);
      if (!spec) continue;
      const auto array = construct::build(*spec);
      const auto doc = make_document(*spec, array);
      const auto back = parse_document(to_json(doc));
      CAPTURE(to_json(doc));
      REQUIRE(back == doc);
      REQUIRE(replay(back) == array);
      REQUIRE(candidate_of(back) == array);
    }
  }
}

TEST_CASE("parse_document errors") {
  CHECK_THROWS_AS(parse_document("{"), Error);
  CHECK_THROWS_AS(parse_document("[1,2]"), Error);
  CHECK_THROWS_AS(parse_document(R"({"format":2,"perm":[1]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"n":3,"perm":[1,2]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"perm":"1,2"})"), Error);
  const auto doc = parse_document(R"({"perm":[1,1]})");
  CHECK(doc.n == 2);
  CHECK_THROWS_AS(candidate_of(doc), Error);
  CHECK_THROWS_AS(spec_of(parse_document(R"({"perm":[1],"method":"w9","q":5,"params":{"alpha":2}})")), Error);
  CHECK_THROWS_AS(spec_of(parse_document(R"({"perm":[1],"method":"w1","q":6,"params":{"alpha":2}})")), Error);
}

TEST_CASE("list parsing") {
  CHECK(parse_int_list("2,4,3,1") == std::vector<int>{2, 4, 3, 1});
  CHECK(parse_int_list(" 2, 4 ") == std::vector<int>{2, 4});
  CHECK(parse_u64_list("10,1000") == std::vector<std::uint64_t>{10, 1000});
  CHECK_THROWS_AS(parse_int_list(""), Error);
  CHECK_THROWS_AS(parse_int_list("1,,2"), Error);
  CHECK_THROWS_AS(parse_int_list("1,x"), Error);
  CHECK_THROWS_AS(parse_u64_list("-3"), Error);
}

TEST_CASE("census csv") {
  CHECK(fixed6(0.2738095238) == "0.273810");
  CHECK(fixed6(0.0) == "0.000000");
  CHECK(fixed6(1.0 / 3.0) == "0.333333");

  density::CensusResult r;
  r.rows.push_back({1000, 46, 168, 46.0 / 168.0, 0.2657});
  r.rows.push_back({5, 0, 3, 0.0, std::nullopt});
  CHECK(census_csv(r) ==
        "# format=1\n"
        "x,count,pi_x,ratio,predicted\n"
        "1000,46,168,0.273810,0.265700\n"
        "5,0,3,0.000000,\n");

  const auto csv = census_csv(density::census_t4(10'000));
  CHECK(csv.find('\r') == std::string::npos);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 2 + density::default_checkpoints(10'000).size());
}
