#include <random>

#include "doctest.h"
#include "isofam/io.hpp"
#include "known_lists.hpp"

using namespace isofam;
using gf2::Subspace;
using nlohmann::json;

TEST_CASE("subspace JSON") {
  const Subspace s = known_lists::make(4, {"1110", "0100"});
  CHECK(io::to_json(s).dump() == R"({"D":4,"basis":["1010","0100"]})");
  CHECK(io::subspace_from_json(json::parse(R"({"basis":["1111"]})")) == known_lists::make(4, {"1111"}));
  CHECK(io::subspace_from_json(json::parse(R"({"basis":[]})"), 6) == Subspace(6));
  CHECK_THROWS_AS(io::subspace_from_json(json::parse(R"({"basis":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::subspace_from_json(json::parse(R"({"D":4,"basis":["10"]})")),
                  gf2::DimensionError);
  CHECK_THROWS(io::subspace_from_json(json::parse(R"({"basis":["1x"]})")));
  CHECK_THROWS_AS(io::subspace_from_json(json::parse("[1]")), std::invalid_argument);
  CHECK(io::subspace_csv_field(s) == "1010;0100");
}

TEST_CASE("subspace JSON round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int D = 1 + static_cast<int>(rng() % 20);
    Subspace s(D);
    const int gens = static_cast<int>(rng() % 6);
    for (int k = 0; k < gens; ++k) s.insert(rng() & gf2::low_mask(D));
    const Subspace back = io::subspace_from_json(json::parse(io::to_json(s).dump()));
    REQUIRE(back == s);
  }
}

TEST_CASE("arc JSON round trip") {
  CHECK(io::to_json(noncrossing::ArcSequence(6, {{1, 3}, {5, 5}})).dump() == "[[1,3],[5,5]]");
  for (int D = 0; D <= 10; D += 2) {
    for (const auto& seq : noncrossing::enumerate_Z(D)) {
      REQUIRE(io::arcs_from_json(json::parse(io::to_json(seq).dump()), D) == seq);
    }
  }
  CHECK_THROWS_AS(io::arcs_from_json(json::parse("[[1]]"), 4), std::invalid_argument);
  CHECK_THROWS_AS(io::arcs_from_json(json::parse("[[1,3],[3,5]]"), 6), std::invalid_argument);
  CHECK_THROWS_AS(io::arcs_from_json(json::parse("{}"), 4), std::invalid_argument);
}

TEST_CASE("collection JSON keeps canonical order") {
  const auto t = families::build_families(4);
  const json j = io::to_json(t);
  CHECK(j.at("D") == 4);
  REQUIRE(j.at("f0").size() == 10);
  CHECK(j.at("f1").size() == 5);
  for (std::size_t k = 0; k < t.f0.size(); ++k) {
    CHECK(io::subspace_from_json(j.at("f0")[k]) == t.f0[k]);
  }
  const json c = io::to_json(noncrossing::build_C(6));
  CHECK(c.at("members").size() == 14);
  CHECK(c.at("members")[0].dump() == R"({"D":6,"basis":[]})");
  const json z = io::to_json(noncrossing::enumerate_Z(4), 4);
  CHECK(z.at("members").size() == 5);
}
