#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = equichar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("goldens") {
  CHECK(run({"relations", "--n", "2"}).out == golden("relations_n2.txt"));
  CHECK(run({"presentation", "--family", "u", "--rank", "2"}).out == golden("presentation_u2.txt"));
  CHECK(run({"map", "--kind", "tensor-line", "--rank", "1"}).out == golden("map_tensor_line.txt"));
}

TEST_CASE("examples") {
  Result r = run({"relations", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "u^2 = u\n");

  r = run({"map", "--kind", "tensor-line", "--rank", "1"});
  CHECK(r.out.find("  u -> y - u(x)1 - 1(x)u + 2 u(x)u\n") != std::string::npos);

  r = run({"dims", "--family", "u", "--rank", "2", "--max-degree", "2", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) CHECK(row["presentation"] == row["oracle"]);
  CHECK(j["rows"][1]["presentation"] == 5);

  r = run({"decompose", "--n", "2", "--expr", "w1^2 + w2^2"});
  CHECK(r.out == "-2 e2 + e1^2\n");
  r = run({"basis", "--n", "2", "--degree", "0"});
  CHECK(r.out == "1\nu\ng_{0,2}\n# 3 elements, 4 over A_Q\n");
  r = run({"stems", "--mul", "u_2s", "x/u_2s^2"});
  CHECK(r.out == "x/u_2s\n");
  r = run({"stems", "--group", "2", "2"});
  CHECK(r.out == "(2, 2): M0\n  top: u_2s\n  bottom: u_s^2\n");
  r = run({"relations", "--n", "2", "--s", "0", "--i", "1", "--t", "1", "--j", "1"});
  CHECK(r.out == "u*g_{1,1} = e1*g_{0,2} + g_{1,1}\n");
}

TEST_CASE("json") {
  Result r = run({"map", "--kind", "forget-sp-u", "--rank", "1", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "forget-sp-u");
  CHECK(j["source"]["family"] == "U");
  CHECK(j["source"]["rank"] == 2);
  CHECK(j["target"]["family"] == "Sp");
  CHECK(j["images"][2]["generator"] == "e2");
  CHECK(j["images"][2]["polynomial"] == "-k1");

  r = run({"relations", "--n", "2", "--json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["relations"][0]["relation"] == "u^2 = 2 g_{0,2} + u");
  CHECK(j["relations"][0]["leading_coefficient"] == "2");
}

TEST_CASE("input file and cache") {
  auto dir = std::filesystem::temp_directory_path() / "equichar_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto file = dir / "p.txt";
  std::ofstream(file) << "w1*u2 + w2*u1\n";
  Result r = run({"decompose", "--n", "2", "--input", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "g_{1,1}\n");

  auto cache = (dir / "cache").string();
  Result a = run({"relations", "--n", "3", "--cache", cache});
  Result b = run({"relations", "--n", "3", "--cache", cache, "--parallel", "3"});
  CHECK(a.out == b.out);
  CHECK(a.out == run({"relations", "--n", "3"}).out);
  CHECK(std::filesystem::exists(dir / "cache" / "rel" / "n3"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"presentation", "--family", "gl", "--rank", "2"}).code == 2);
  CHECK(run({"presentation", "--family", "u"}).code == 2);
  CHECK(run({"relations", "--n", "2", "--s", "1"}).code == 2);
  CHECK(run({"relations", "--n", "2", "--s", "1", "--i", "1", "--t", "0", "--j", "1"}).code == 2);
  CHECK(run({"decompose", "--n", "2", "--expr", "w1"}).code == 2);
  CHECK(run({"decompose", "--n", "2"}).code == 2);
  CHECK(run({"dims", "--family", "su", "--rank", "2", "--max-degree", "1"}).code == 2);
  CHECK(run({"dims", "--family", "u", "--rank", "1", "--max-degree", "40"}).code == 2);
  CHECK(run({"map", "--kind", "whitney-sum", "--rank", "1"}).code == 2);
  CHECK(run({"stems", "--mul", "x", "u_s"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  Result e = run({"presentation", "--family", "u", "--rank", "9"});
  CHECK(e.code == 2);
  CHECK_FALSE(e.err.empty());
  CHECK(e.out.empty());
  Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("verify suites") {
  Result s = run({"verify", "--suite", "stems"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("PASS  9. stems", 0) == 0);
  // the appendix suite contains the printed leading-coefficient and minimality claims
  Result a = run({"verify", "--suite", "appendix"});
  CHECK(a.code == 1);
  CHECK(a.out.find("PASS  1.") != std::string::npos);
  CHECK(a.out.find("FAIL  2.") != std::string::npos);
}

TEST_CASE("deterministic output") {
  std::vector<std::string> cmd = {"presentation", "--family", "so", "--rank", "5", "--json"};
  CHECK(run(cmd).out == run(cmd).out);
}
