#include <set>
#include <vector>

#include "doctest.h"
#include "isofam/counting.hpp"
#include "isofam/families.hpp"
#include "known_lists.hpp"

using namespace isofam;
using families::Line;
using families::Shape;
using gf2::BitVector;
using gf2::Subspace;
using known_lists::make;

TEST_CASE("embed_T branches") {
  CHECK(families::embed_T(1, BitVector::parse("10")) == BitVector::parse("0010"));
  const BitVector v = families::embed_T(2, BitVector::parse("10"));
  CHECK(v == BitVector::parse("1110"));
  // span(T_2(e_1)) + Fe_2 is one of the listed members of F0(V_4)
  const auto f0 = known_lists::make_all(4, known_lists::kF0_4);
  Subspace s(4);
  s.insert(v.bits());
  s.insert(BitVector::parse("0100").bits());
  CHECK(std::binary_search(f0.begin(), f0.end(), s, gf2::canonical_less));

  // i = D: every a < D - 1, so T_D is the inclusion
  for (gf2::Word x = 0; x < 16; ++x) {
    CHECK(families::embed_T(6, BitVector(4, x)).bits() == x);
  }
  CHECK_THROWS_AS(families::embed_T(5, BitVector::parse("10")), std::out_of_range);
  CHECK_THROWS_AS(families::embed_T(0, BitVector::parse("10")), std::out_of_range);
}

TEST_CASE("embed_T is injective") {
  for (int D = 2; D <= 10; D += 2) {
    for (int i = 1; i <= D; ++i) {
      std::set<gf2::Word> images;
      for (gf2::Word x = 0; x < (gf2::Word{1} << (D - 2)); ++x) {
        images.insert(families::embed_T_bits(D, i, x));
      }
      REQUIRE(images.size() == (std::size_t{1} << (D - 2)));
    }
  }
}

TEST_CASE("lines_G splits by parity") {
  auto g2 = families::lines_G(2);
  CHECK(g2.g0 == std::vector<Line>{{1, 2}});
  CHECK(g2.g1 == std::vector<Line>{{1, 1}, {2, 2}});
  auto g0 = families::lines_G(0);
  CHECK(g0.g0.empty());
  CHECK(g0.g1.empty());
  for (int D = 2; D <= 16; D += 2) {
    int odd = 0, even = 0;
    for (int a = 1; a <= D; ++a) {
      for (int b = a; b <= D; ++b) ((b - a) % 2 ? odd : even)++;
    }
    const auto g = families::lines_G(D);
    CHECK(static_cast<int>(g.g0.size()) == odd);
    CHECK(static_cast<int>(g.g1.size()) == even);
    CHECK(static_cast<int>(g.g0.size() + g.g1.size()) == D * (D + 1) / 2);
  }
  auto g4 = families::lines_G(4);
  CHECK(g4.g0.size() == 4);
  CHECK(g4.g1.size() == 6);
  CHECK_THROWS(families::lines_G(3));
}

TEST_CASE("lines_in scans consecutive sums") {
  CHECK(families::lines_in(make(4, {"1110", "0100"})) == std::vector<Line>{{1, 3}, {2, 2}});
  CHECK(families::lines_in(make(4, {"1000", "0001"})) == std::vector<Line>{{1, 1}, {4, 4}});
  CHECK(families::lines_in(Subspace(4)).empty());
}

TEST_CASE("classify_by_lines") {
  auto c = families::classify_by_lines(make(4, {"1100", "0001"}));
  CHECK(c.shape == Shape::kF1);
  REQUIRE(c.distinguished);
  CHECK(*c.distinguished == Line{1, 2});
  CHECK(families::classify_by_lines(make(4, {"1000", "0010"})).shape == Shape::kF0);
  // B_E = {(1,1),(2,2),(1,2)} has three lines in a plane
  CHECK(families::classify_by_lines(make(4, {"1000", "0100"})).shape == Shape::kOther);
  CHECK(families::classify_by_lines(Subspace(4)).shape == Shape::kF0);
  // two G0 lines
  CHECK(families::classify_by_lines(make(4, {"1100", "0011"})).shape == Shape::kOther);
}

TEST_CASE("build_families small cases match the listed members") {
  const auto t0 = families::build_families(0);
  CHECK(t0.f0 == std::vector<Subspace>{Subspace(0)});
  CHECK(t0.f1.empty());

  const auto t2 = families::build_families(2);
  CHECK(t2.f0 == known_lists::make_all(2, known_lists::kF0_2));
  CHECK(t2.f1 == known_lists::make_all(2, known_lists::kF1_2));

  const auto t4 = families::build_families(4);
  CHECK(t4.f0 == known_lists::make_all(4, known_lists::kF0_4));
  CHECK(t4.f1 == known_lists::make_all(4, known_lists::kF1_4));
  CHECK(t4.f0_lagrangian.size() == 5);
  CHECK(t4.f0_sub.size() == 5);

  CHECK_THROWS(families::build_families(5));
  CHECK_THROWS(families::build_families(-2));
}

TEST_CASE("family sizes and stratification") {
  const auto tables = families::build_families_upto(12);
  for (const auto& t : tables) {
    if (t.D == 0) continue;
    const long d = t.D / 2;
    CHECK(counting::BigInt(t.f0.size()) == counting::binomial(t.D + 1, d));
    CHECK(counting::BigInt(t.f1.size()) == counting::binomial(t.D + 1, d - 1));
    CHECK(counting::BigInt(t.f0_lagrangian.size()) == counting::catalan(d + 1));
    CHECK(t.f0_lagrangian.size() + t.f0_sub.size() == t.f0.size());
    for (const auto& e : t.f0_lagrangian) CHECK(e.dim() == d);
    for (const auto& e : t.f0_sub) CHECK(e.dim() < d);
    CHECK(std::is_sorted(t.f0.begin(), t.f0.end(), gf2::canonical_less));
  }
}

TEST_CASE("members are direct sums of their lines") {
  for (const auto& t : families::build_families_upto(10)) {
    for (const auto& e : t.f0) {
      REQUIRE(gf2::is_isotropic(e));
      REQUIRE(families::classify_by_lines(e).shape == Shape::kF0);
      REQUIRE_FALSE(t.in_f1(e));
    }
    for (const auto& e : t.f1) {
      REQUIRE(gf2::is_isotropic(e));
      REQUIRE(e.dim() <= t.D / 2);
      const auto c = families::classify_by_lines(e);
      REQUIRE(c.shape == Shape::kF1);
      // the distinguished line runs from an odd to an even index
      REQUIRE(c.distinguished->a % 2 == 1);
      REQUIRE(c.distinguished->b % 2 == 0);
    }
  }
}

TEST_CASE("xi examples") {
  const auto t = families::build_families(4);
  CHECK(families::xi(t, make(4, {"1111"})) == Subspace(4));
  CHECK(families::xi(t, make(4, {"1100", "0001"})) == make(4, {"0001"}));
  const Subspace e0 = families::xi(t, make(4, {"1111", "0100"}));
  CHECK(e0 == make(4, {"0100"}));
  CHECK(t.in_f0_sub(e0));
  CHECK_THROWS_AS(families::xi(t, make(4, {"1000"})), std::invalid_argument);

  const families::XiMap map(t);
  CHECK(families::xi_inverse(map, Subspace(4)) == make(4, {"1111"}));
  CHECK(families::xi_inverse(map, make(4, {"0001"})) == make(4, {"1100", "0001"}));
  CHECK(families::xi_inverse(map, make(4, {"0100"})) == make(4, {"1111", "0100"}));
  CHECK_THROWS_AS(families::xi_inverse(map, make(4, {"1000", "0010"})), std::invalid_argument);
}

TEST_CASE("xi is a bijection onto F0 below half dimension") {
  for (const auto& t : families::build_families_upto(10)) {
    const families::XiMap map(t);
    std::set<std::vector<gf2::Word>> images;
    for (const auto& [e, e0] : map.pairs()) {
      REQUIRE(t.in_f0_sub(e0));
      REQUIRE(map.preimage(e0) == e);
      images.insert({e0.rows().begin(), e0.rows().end()});
    }
    REQUIRE(images.size() == t.f0_sub.size());
  }
}
