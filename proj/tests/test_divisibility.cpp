#include <doctest.h>

#include "wonderful/divisibility.hpp"

using namespace wonderful;

TEST_SUITE("divisibility") {

TEST_CASE("allowed degree sets") {
  CHECK(allowed_degrees({"E6/F4", 8, 3, 2}) == std::set<int>{0, 9, 17, 26});
  CHECK(allowed_degrees({"group", 2, 1, 1}) == std::set<int>{0, 3});
  CHECK(allowed_degrees({"group", 2, 3, 2}) == std::set<int>{0, 3, 5, 8});
  // PGL/PSp(3): complement in [0, 14] of d or 14 - d in {1,2,3,4,6,7,8}
  CHECK(allowed_degrees({"PGL/PSp", 4, 3, 2}) == std::set<int>{0, 5, 9, 14});
  CHECK(allowed_degrees({"PSO/PSO", 6, 1, 1}) == std::set<int>{0, 7});
}

TEST_CASE("allowed sets are symmetric under d -> N - d") {
  for (const auto& name : catalog_names()) {
    auto x = build_case(name);
    if (!x.divisibility) continue;
    CAPTURE(name);
    const auto& r = *x.divisibility;
    CHECK(r.modulus * r.restricted_positive_roots + r.rank == x.dimension_N);
    auto s = allowed_degrees(r);
    for (int d : s) CHECK(s.count(x.dimension_N - d) == 1);
    // the tabulated degrees contain the derived ones
    auto tab = tabulated_degrees(x);
    REQUIRE(tab);
    for (int d : s) CHECK(tab->count(d) == 1);
  }
}

TEST_CASE("table and length predicates") {
  auto x = build_case("E6/F4");
  const auto& rule = *x.divisibility;
  auto t = cohomology_table(x, lambda_zero(x));
  CHECK(check_table_against_rule(t, rule).ok);
  CHECK(check_lengths_against_rule(contributions(x, x.pic_weight(IntVec{-9, 2})), rule).ok);

  CohomologyTable bad;
  bad.lambda = lambda_zero(x);
  bad.groups.push_back(DegreeGroup{1, 1, {}});
  auto r = check_table_against_rule(bad, rule);
  CHECK_FALSE(r.ok);
  CHECK(r.counterexample.find("degree 1") != std::string::npos);

  Contribution c;
  c.mu = Weight({0, 0, 0, 0, 0, 0});
  c.length = 5;
  CHECK_FALSE(check_lengths_against_rule({c}, rule).ok);
}

TEST_CASE("tabulated degree sets") {
  CHECK(tabulated_degrees(build_case("group:A1")) == std::set<int>{0, 3});
  CHECK(tabulated_degrees(build_case("PSO/PSO(4)")) == std::set<int>{0, 7});
  CHECK(tabulated_degrees(build_case("PGL/PSp(3)")) == std::set<int>{0, 5, 9, 14});
  CHECK_FALSE(tabulated_degrees(build_case("flag:A2")));
}

}  // TEST_SUITE
