#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "isofam/conjecture.hpp"
#include "isofam/oracle.hpp"

using namespace isofam;
using conjecture::Matrix;
using conjecture::SuppliedFamily;
using gf2::Subspace;
using gf2::Word;

namespace {

const std::filesystem::path kFixtures = ISOFAM_FIXTURE_DIR;

std::vector<Matrix> all_invertible(int d) {
  std::vector<Matrix> out;
  conjecture::for_each_invertible(d, [&out](const Matrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("GL enumeration") {
  CHECK(all_invertible(1).size() == 1);
  CHECK(all_invertible(2).size() == 6);
  const auto gl3 = all_invertible(3);
  CHECK(gl3.size() == 168);
  CHECK(gl3.front() == Matrix::identity(3));
  for (std::size_t k = 1; k < gl3.size(); ++k) REQUIRE(gl3[k - 1].rows < gl3[k].rows);
  for (const auto& m : gl3) REQUIRE(m.invertible());
  CHECK_FALSE((Matrix{2, {1, 1}}).invertible());
}

TEST_CASE("target family") {
  const auto t2 = conjecture::target_family(2);
  CHECK(t2.subgroups.size() == 5);
  // every subgroup of F^2
  CHECK(t2.subgroups == oracle::all_subspaces(2));
  CHECK(conjecture::target_family(3).subgroups.size() == 14);
}

TEST_CASE("fingerprint") {
  const auto f2 = conjecture::fingerprint(conjecture::target_family(2));
  CHECK(f2.dims == std::map<int, int>{{0, 1}, {1, 3}, {2, 1}});
  const auto f3 = conjecture::fingerprint(conjecture::target_family(3));
  CHECK(f3.dims == std::map<int, int>{{0, 1}, {1, 6}, {2, 6}, {3, 1}});
  const auto empty = conjecture::fingerprint(conjecture::make_family(3, {}));
  CHECK(empty.dims.empty());
  CHECK(empty.profile.empty());
}

TEST_CASE("fingerprint is GL-invariant") {
  std::mt19937_64 rng(7);
  const auto gl3 = all_invertible(3);
  const auto all3 = oracle::all_subspaces(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Subspace> pick;
    for (const auto& s : all3) {
      if (rng() & 1u) pick.push_back(s);
    }
    const auto fam = conjecture::make_family(3, pick);
    const auto fp = conjecture::fingerprint(fam);
    for (const auto& g : gl3) REQUIRE(conjecture::fingerprint(conjecture::apply(g, fam)) == fp);
  }
}

TEST_CASE("identity witness on the target itself") {
  for (int d = 1; d <= 4; ++d) {
    const auto r = conjecture::gl_match(conjecture::target_family(d));
    REQUIRE(r.found);
    CHECK(*r.witness == Matrix::identity(d));
    CHECK(r.tried == 1);
  }
}

TEST_CASE("every GL(3) translate is matched by the least witness") {
  const auto target = conjecture::target_family(3);
  const auto gl3 = all_invertible(3);
  for (const auto& g : gl3) {
    const auto fam = conjecture::apply(g, target);
    const auto r = conjecture::gl_match(fam);
    REQUIRE(r.found);
    REQUIRE(conjecture::apply(*r.witness, fam).subgroups == target.subgroups);
    // brute force: nothing earlier in the order works
    for (const auto& h : gl3) {
      if (h == *r.witness) break;
      REQUIRE(conjecture::apply(h, fam).subgroups != target.subgroups);
    }
  }
}

TEST_CASE("families outside the orbit") {
  SUBCASE("wrong size") {
    const auto r = conjecture::gl_match(conjecture::load_family(kFixtures / "lines_only.json"));
    CHECK_FALSE(r.found);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.reason.empty());
  }
  SUBCASE("same grading, different incidence") {
    // C(V^1_6) misses exactly one line and one plane of F^3. Swap whether
    // the missing line lies in the missing plane.
    const auto target = conjecture::target_family(3);
    const auto lines = oracle::all_subspaces(3, 1);
    const auto planes = oracle::all_subspaces(3, 2);
    Subspace missing_line(3), missing_plane(3);
    for (const auto& l : lines) {
      if (!std::binary_search(target.subgroups.begin(), target.subgroups.end(), l, gf2::canonical_less))
        missing_line = l;
    }
    for (const auto& p : planes) {
      if (!std::binary_search(target.subgroups.begin(), target.subgroups.end(), p, gf2::canonical_less))
        missing_plane = p;
    }
    const bool incident = gf2::is_subspace_of(missing_line, missing_plane);
    Subspace other_plane(3);
    for (const auto& p : planes) {
      if (gf2::is_subspace_of(missing_line, p) != incident) other_plane = p;
    }
    std::vector<Subspace> subgroups{Subspace(3), Subspace::whole(3)};
    for (const auto& l : lines) {
      if (l != missing_line) subgroups.push_back(l);
    }
    for (const auto& p : planes) {
      if (p != other_plane) subgroups.push_back(p);
    }
    const auto fam = conjecture::make_family(3, subgroups);
    CHECK(conjecture::fingerprint(fam).dims == conjecture::fingerprint(target).dims);
    const auto r = conjecture::gl_match(fam);
    CHECK_FALSE(r.found);
  }
  SUBCASE("rank too large") {
    CHECK_THROWS_AS(conjecture::gl_match(conjecture::make_family(6, {})), std::invalid_argument);
  }
}

TEST_CASE("load_family") {
  const auto f = conjecture::load_family(kFixtures / "c_v1_4.json");
  CHECK(f.d == 2);
  CHECK(f.subgroups.size() == 5);
  CHECK(conjecture::gl_match(f).found);

  const auto rotated = conjecture::load_family(kFixtures / "c_v1_6_rotated.json");
  const auto r = conjecture::gl_match(rotated);
  REQUIRE(r.found);
  CHECK(conjecture::apply(*r.witness, rotated).subgroups == conjecture::target_family(3).subgroups);

  CHECK_THROWS_AS(conjecture::load_family(kFixtures / "bad_length.json"), gf2::DimensionError);
  CHECK_THROWS(conjecture::load_family(kFixtures / "does_not_exist.json"));
  CHECK_THROWS_AS(conjecture::parse_family(nlohmann::json::parse(R"({"d": 2})")),
                  std::invalid_argument);
  // duplicates collapse
  const auto dup = conjecture::parse_family(
      nlohmann::json::parse(R"({"d": 2, "subgroups": [["10"], ["10", "10"], []]})"));
  CHECK(dup.subgroups.size() == 2);
  CHECK(conjecture::parse_family(conjecture::to_json(rotated)).subgroups == rotated.subgroups);
}

TEST_CASE("match result JSON") {
  const auto j = conjecture::to_json(conjecture::gl_match(conjecture::target_family(2)));
  CHECK(j.at("found") == true);
  CHECK(j.at("witness") == nlohmann::json::array({"10", "01"}));
  const auto miss = conjecture::to_json(conjecture::gl_match(conjecture::make_family(2, {})));
  CHECK(miss.at("found") == false);
  CHECK(miss.at("witness").is_null());
}

// Families supplied from outside, one JSON file each, in the directory named
// by ISOFAM_FAMILY_DIR. Skipped when the variable is unset.
TEST_CASE("supplied families are GL-equivalent to the target") {
  const char* dir = std::getenv("ISOFAM_FAMILY_DIR");
  if (dir == nullptr) {
    MESSAGE("ISOFAM_FAMILY_DIR not set, skipping");
    return;
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    const auto fam = conjecture::load_family(entry.path());
    if (fam.d > conjecture::kMaxRank) {
      MESSAGE("skipping " << entry.path() << ": rank " << fam.d);
      continue;
    }
    const auto r = conjecture::gl_match(fam);
    CHECK_MESSAGE(r.found, entry.path().string() << ": " << r.reason);
  }
}
