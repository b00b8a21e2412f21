#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wonderful/io.hpp"

using namespace wonderful;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("JSON schema") {
  auto x = build_case("PSO/PSO(2)");
  auto t = cohomology_table(x, x.pic_weight(IntVec{-6}));
  auto j = table_to_json({&x, &t, std::nullopt});
  CHECK(j["variety"] == "PSO/PSO(2)");
  CHECK(j["lambda"] == json::array({-6, -6}));
  CHECK(j["N"] == 3);
  REQUIRE(j["groups"].size() == 1);
  const auto& g = j["groups"][0];
  CHECK(g["degree"] == 3);
  CHECK(g["dimension"] == "10");   // decimal string
  CHECK(g["constituents"][0]["multiplicity"].is_number_integer());
  const auto& w = g["constituents"][0]["witnesses"][0];
  CHECK(w["J"] == json::array({1}));
  CHECK(w.contains("mu"));
  CHECK(w["length"].is_number_integer());
}

TEST_CASE("big dimensions survive as strings") {
  auto x = build_case("E6/F4");
  auto t = cohomology_table(x, x.pic_weight(IntVec{2, 2}), false);
  auto j = table_to_json({&x, &t, 0});
  CHECK(j["groups"][0]["dimension"] == "91950");
  CHECK(j["groups"][0]["constituents"][0]["witnesses"].empty());
}

TEST_CASE("degree filter and formats") {
  auto x = build_case("PGL/PSp(3)");
  auto t = cohomology_table(x, x.pic_weight(IntVec{-9, -9}));
  REQUIRE(t.groups.size() >= 1);
  const int d = t.groups.back().degree;
  auto j = table_to_json({&x, &t, d});
  CHECK(j["groups"].size() == 1);
  CHECK(j["groups"][0]["degree"] == d);
  CHECK(table_to_json({&x, &t, 99})["groups"].empty());

  auto csv = render_table({&x, &t, std::nullopt}, OutputFormat::Csv);
  CHECK(csv.rfind("degree,highest_weight,multiplicity,irrep_dimension,degree_dimension\n", 0) == 0);
  auto text = render_table({&x, &t, std::nullopt}, OutputFormat::Text);
  CHECK(text.find("N:       14") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), InvalidInput);
}

TEST_CASE("serialisation is deterministic") {
  auto x = build_case("group:A2");
  auto a = cohomology_table(x, x.pic_weight(IntVec{-4, 1}));
  auto b = cohomology_table(build_case("group:A2"), x.pic_weight(IntVec{-4, 1}));
  CHECK(render_table({&x, &a, std::nullopt}, OutputFormat::Json) ==
        render_table({&x, &b, std::nullopt}, OutputFormat::Json));
}

TEST_CASE("describe") {
  CHECK(describe(build_case("E6/F4")).find("N = 26") != std::string::npos);
  CHECK(describe(build_case("PSO/PSO(2)")).find("N = 3") != std::string::npos);
  auto s = describe(build_case("SO7/G2"));
  CHECK(s.find("lambda_0 = -4 w~_1") != std::string::npos);
  CHECK(s.find("FAIL") == std::string::npos);
}

TEST_CASE("descriptor round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto x = build_case(name);
    auto y = load_variety(json::parse(variety_to_json(x).dump()));
    CHECK(y.name == x.name);
    CHECK(y.spherical_roots == x.spherical_roots);
    CHECK(y.pic_basis == x.pic_basis);
    CHECK(y.q_simple_roots == x.q_simple_roots);
    CHECK(y.dimension_N == x.dimension_N);
    CHECK(y.two_rho_X == x.two_rho_X);
  }
}

TEST_CASE("descriptor loading normalises and validates") {
  auto doc = json::parse(R"({
    "name": "P3",
    "group": [["A", 1], ["A", 1]],
    "spherical_roots": [[2, 2]],
    "pic_basis": [[-1, -1]],
    "q_simple_roots": []
  })");
  auto x = load_variety(doc);
  CHECK(x.pic_basis[0] == Weight({1, 1}));   // flipped so (w~, gamma) > 0
  CHECK(x.dimension_N == 3);

  doc["spherical_roots"] = json::array({json::array({6, 6})});
  doc["sgamma"] = json::array({json::array({json::array({1, 0}), json::array({0, 1})})});
  CHECK_THROWS_AS(load_variety(doc), ValidationError);

  CHECK_THROWS_AS(load_variety(json::parse(R"({"group": [["A", 1]]})")), InvalidInput);
  CHECK_THROWS_AS(load_variety(json::parse(R"({"group": [["Z", 1]], "spherical_roots": [],
                                              "pic_basis": [], "q_simple_roots": []})")),
                  InvalidInput);
  CHECK_THROWS_AS(load_variety_file("/nonexistent/x.json"), InvalidInput);
}

TEST_CASE("shipped descriptor file") {
  auto x = load_variety_file(WONDERFUL_TEST_DATA "/p3_group_a1.json");
  CHECK(x.dimension_N == 3);
  CHECK(cohomology_table(x, x.pic_weight(IntVec{-6})).dimension(3) == 10);
}

TEST_CASE("golden JSON") {
  auto x = build_case("PSO/PSO(2)");
  auto t = cohomology_table(x, x.pic_weight(IntVec{-6}));
  std::ifstream in(WONDERFUL_TEST_DATA "/../golden/pso2_minus6.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(render_table({&x, &t, std::nullopt}, OutputFormat::Json) == ss.str());
}

}  // TEST_SUITE
