#include <doctest.h>

#include <algorithm>

#include "wonderful/variety.hpp"

using namespace wonderful;

namespace {

bool check_failed(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return !c.passed;
  FAIL("no check named " << name);
  return false;
}

}  // namespace

TEST_SUITE("variety") {

TEST_CASE("every catalog entry validates") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    WonderfulVariety x;
    REQUIRE_NOTHROW(x = build_case(name));
    CHECK(validate(x).all_passed());
  }
}

TEST_CASE("dimensions") {
  CHECK(build_case("E6/F4").dimension_N == 26);
  for (int n : {2, 3, 4, 5}) {
    CAPTURE(n);
    CHECK(build_case("PSO/PSO(" + std::to_string(n) + ")").dimension_N == 2 * n - 1);
    CHECK(build_case("Q(" + std::to_string(n) + ")").dimension_N == 2 * n - 1);
  }
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    CHECK(build_case("PGL/PSp(" + std::to_string(n) + ")").dimension_N == 2 * n * n - n - 1);
  }
  CHECK(build_case("group:A1").dimension_N == 3);
  CHECK(build_case("group:A2").dimension_N == 8);
  CHECK(build_case("group:B2").dimension_N == 10);
  CHECK(build_case("group:G2").dimension_N == 14);
  CHECK(build_case("SO7/G2").dimension_N == 7);
  CHECK(build_case("Q7:B3").dimension_N == 7);
  CHECK(build_case("flag:A2").dimension_N == 3);
  CHECK(build_case("flag:A2:2").dimension_N == 2);   // P^2
  CHECK(build_case("flag:G2").dimension_N == 6);
}

TEST_CASE("lambda_0") {
  CHECK(lambda_zero_coords(build_case("PSO/PSO(2)")) == IntVec{-2});
  CHECK(lambda_zero_coords(build_case("PSO/PSO(3)")) == IntVec{-3});
  CHECK(lambda_zero_coords(build_case("PSO/PSO(4)")) == IntVec{-4});
  CHECK(lambda_zero_coords(build_case("SO7/G2")) == IntVec{-4});
  CHECK(lambda_zero_coords(build_case("group:A2")) == IntVec{-2, -2});
  CHECK(lambda_zero_coords(build_case("PGL/PSp(3)")) == IntVec{-3, -3});
  CHECK(lambda_zero_coords(build_case("E6/F4")) == IntVec{-5, -5});
  CHECK_THROWS_AS(lambda_zero_coords(build_case("flag:A2")), InvalidInput);
}

TEST_CASE("E6/F4 data") {
  auto x = build_case("E6/F4");
  CHECK(x.q_simple_roots == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(x.pic_basis[0] == Weight({1, 0, 0, 0, 0, 0}));
  CHECK(x.pic_basis[1] == Weight({0, 0, 0, 0, 0, 1}));
  CHECK(x.two_rho_X == Weight({8, 0, 0, 0, 0, 8}));
  // Q has Levi of type D4, so dim G/Q = 36 - 12
  CHECK(x.dimension_N - static_cast<int>(x.rank()) == 36 - 12);
}

TEST_CASE("group compactification of A1 is P^3") {
  auto x = build_case("group:A1");
  CHECK(x.spherical_roots[0] == Weight({2, 2}));
  CHECK(x.pic_basis[0] == Weight({1, 1}));
  CHECK(x.dimension_N == 3);
}

TEST_CASE("pic membership and spherical expansion") {
  auto x = build_case("PGL/PSp(3)");
  CHECK(pic_contains(x, x.pic_weight(IntVec{2, -1})) == IntVec{2, -1});
  CHECK_FALSE(pic_contains(x, Weight({1, 0, 0, 0, 0})));
  CHECK(spherical_expansion(x, 3 * x.spherical_roots[0] - x.spherical_roots[1]) == IntVec{3, -1});
  CHECK_FALSE(spherical_expansion(x, x.pic_basis[0]));
}

TEST_CASE("corrupted data is rejected") {
  SUBCASE("spherical root scaled by 3 breaks s_gamma data") {
    auto x = build_case("PSO/PSO(3)");
    x.spherical_roots[0] *= 3;
    auto rep = validate(x);
    CHECK_FALSE(rep.all_passed());
    CHECK(check_failed(rep, "sgamma_data"));
    CHECK_THROWS_AS(require_valid(x), ValidationError);
  }
  SUBCASE("wrong N reference") {
    auto x = build_case("E6/F4");
    x.expected_N = 27;
    CHECK(check_failed(validate(x), "dimension_matches_reference"));
  }
  SUBCASE("root inside Q's span") {
    auto x = build_case("SO7/G2");
    x.spherical_roots[0] = x.group->simple_root_weight(1);
    CHECK_FALSE(validate(x).all_passed());
  }
  SUBCASE("dependent pic basis") {
    auto x = build_case("group:A2");
    x.pic_basis[1] = x.pic_basis[0];
    CHECK(check_failed(validate(x), "pic_basis_independent"));
  }
  SUBCASE("wrong divisibility constants") {
    auto x = build_case("PGL/PSp(3)");
    x.divisibility->restricted_positive_roots = 4;
    CHECK(check_failed(validate(x), "divisibility_constants"));
  }
}

TEST_CASE("unknown names") {
  for (const char* n : {"nosuch", "PSO/PSO(1)", "PSO/PSO(x)", "group:Z3", "flag:A2:5", "E6/F5"}) {
    CAPTURE(n);
    CHECK_THROWS_AS(build_case(n), InvalidInput);
  }
}

TEST_CASE("figure cases are rank 1 or 2") {
  for (const auto& n : figure_case_names()) {
    auto x = build_case(n);
    CHECK((x.rank() == 1 || x.rank() == 2));
    CHECK(x.pic_rank() == x.rank());
  }
  CHECK(figure_case_names().size() == 7);
}

}  // TEST_SUITE
