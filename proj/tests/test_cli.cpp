// Runs the wondercoh binary and checks exit codes and outputs.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WONDERCOH_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("list and describe") {
  auto r = run("list");
  CHECK(r.code == 0);
  CHECK(r.out.find("E6/F4\n") != std::string::npos);
  r = run("describe E6/F4");
  CHECK(r.code == 0);
  CHECK(r.out.find("N = 26") != std::string::npos);
  r = run("describe 'PSO/PSO(2)'");
  CHECK(r.out.find("N = 3") != std::string::npos);
  CHECK(run("describe nosuch").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("cohomology") {
  auto r = run("cohomology 'PSO/PSO(2)' --lambda -6 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["groups"].size() == 1);
  CHECK(j["groups"][0]["degree"] == 3);
  CHECK(j["groups"][0]["dimension"] == "10");
  CHECK(r.out == slurp(WONDERFUL_TEST_DATA "/../golden/pso2_minus6.json"));

  r = run("cohomology flag:A1 --lambda 3 --format json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["groups"][0]["degree"] == 0);
  CHECK(j["groups"][0]["dimension"] == "4");

  r = run("cohomology flag:A1 --lambda -1 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["groups"].empty());

  r = run("cohomology E6/F4 --lambda 0,0 --relative-lambda0 --format json --no-witness");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["lambda"] == nlohmann::json::array({-5, 0, 0, 0, 0, -5}));

  r = run("cohomology group:A2 --lambda -4,1 --degree 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("degree,", 0) == 0);

  CHECK(run("cohomology flag:A1 --lambda abc").code == 2);
  CHECK(run("cohomology flag:A1 --lambda 1,2").code == 2);
  CHECK(run("cohomology flag:A1 --lambda 1 --format xml").code == 2);
  CHECK(run("cohomology flag:A1").code == 2);
}

TEST_CASE("deterministic output") {
  const std::string cmd = "cohomology PGL/PSp\\(3\\) --lambda=-9,-9 --format json";
  CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("variety files") {
  auto r = run("cohomology --variety-file " WONDERFUL_TEST_DATA "/p3_group_a1.json --lambda -6 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["groups"][0]["dimension"] == "10");

  const auto bad = std::filesystem::temp_directory_path() / "wondercoh_bad_variety.json";
  std::ofstream(bad) << R"({"group": [["A",1],["A",1]], "spherical_roots": [[6,6]],
    "pic_basis": [[1,1]], "q_simple_roots": [], "sgamma": [[[1,0],[0,1]]]})";
  CHECK(run("describe --variety-file " + bad.string()).code == 3);
  CHECK(run("describe --variety-file /nonexistent.json").code == 2);
}

TEST_CASE("scan") {
  auto r = run("scan group:A1 --box 6 --checks vanishing");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(run("scan 'PGL/PSp(3)' --box 4 --checks divisibility").code == 0);
  CHECK(run("scan 'PSO/PSO(2)' --box 10 --checks serre").code == 0);
  CHECK(run("scan flag:A2 --box 3 --checks divisibility,h0").code == 0);
  CHECK(run("scan group:A1 --checks nonsense").code == 2);
}

TEST_CASE("plot") {
  const auto dir = std::filesystem::temp_directory_path() / "wondercoh_plot_test";
  std::filesystem::create_directories(dir);
  const auto svg = dir / "ga2.svg";
  CHECK(run("plot group:A2 --min -3 --max 3 --out " + svg.string()).code == 0);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);
  const auto side = slurp(dir / "ga2.classes.txt");
  CHECK(side.find("\n1 1 0\n") != std::string::npos);
  CHECK(side.find("\n0 1 1\n") != std::string::npos);

  const auto r1 = dir / "r.svg";
  CHECK(run("plot 'PSO/PSO(3)' --kind R --lambda 1 --min -2 --max 2 --out " + r1.string()).code == 0);
  CHECK(slurp(dir / "r.classes.txt") == "-2 0\n-1 0\n0 0\n1 1\n2 1\n");

  CHECK(run("plot flag:A2 --out " + (dir / "f.svg").string()).code == 2);
  CHECK(run("plot group:A2").code == 2);   // --out is required
}

}  // TEST_SUITE
