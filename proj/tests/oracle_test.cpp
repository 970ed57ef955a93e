#include <set>

#include "doctest.h"
#include "isofam/counting.hpp"
#include "isofam/families.hpp"
#include "isofam/noncrossing.hpp"
#include "isofam/oracle.hpp"

using namespace isofam;

TEST_CASE("all_subspaces counts") {
  CHECK(oracle::all_subspaces(2).size() == 5);
  CHECK(oracle::all_subspaces(3, 1).size() == 7);
  // (2^4 - 1)(2^4 - 2) / ((2^2 - 1)(2^2 - 2))
  CHECK(oracle::all_subspaces(4, 2).size() == 35);
  CHECK(oracle::gaussian_binomial(4, 2) == 35);
  for (int n = 0; n <= 8; ++n) {
    std::size_t total = 0;
    for (int k = 0; k <= n; ++k) {
      std::size_t count = 0;
      oracle::for_each_subspace(n, k, [&count](const gf2::Subspace&) { ++count; });
      REQUIRE(count == oracle::gaussian_binomial(n, k));
      total += count;
    }
    if (n <= 6) {
      const auto all = oracle::all_subspaces(n);
      REQUIRE(all.size() == total);
      REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(oracle::all_subspaces(9), oracle::BudgetExceeded);
  oracle::OracleBudget wide;
  wide.max_ambient_dim = 9;
  CHECK_NOTHROW(oracle::all_subspaces(9, 1, wide));
  CHECK_THROWS_AS(oracle::noncrossing_direct(12), oracle::BudgetExceeded);
}

TEST_CASE("all_isotropic") {
  CHECK(oracle::all_isotropic(2, 1).size() == 3);
  CHECK(oracle::all_isotropic(2, 2).empty());
  const auto iso = oracle::all_isotropic(4);
  const std::set<std::vector<gf2::Word>> seen = [&] {
    std::set<std::vector<gf2::Word>> s;
    for (const auto& e : iso) s.insert({e.rows().begin(), e.rows().end()});
    return s;
  }();
  const auto t = families::build_families(4);
  for (const auto* fam : {&t.f0, &t.f1}) {
    for (const auto& e : *fam) CHECK(seen.contains({e.rows().begin(), e.rows().end()}));
  }
  CHECK_THROWS(oracle::all_isotropic(3));
}

TEST_CASE("noncrossing_direct") {
  CHECK(oracle::noncrossing_direct(4).size() == 5);
  CHECK(oracle::noncrossing_direct(6).size() == 14);
  CHECK(counting::BigInt(oracle::noncrossing_direct(8).size()) == counting::catalan(5));
  for (int D = 0; D <= 10; D += 2) {
    REQUIRE(oracle::noncrossing_direct(D) == noncrossing::enumerate_Z(D));
  }
}
