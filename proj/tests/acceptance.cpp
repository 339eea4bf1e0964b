// Acceptance battery: one PASS/FAIL line per criterion.
// With --known-failures, exits 0 exactly when the failing set equals the given list.

#include "cli.hpp"
#include "equichar/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace equichar;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult cli_goldens(const std::string& dir) {
  CriterionResult r;
  r.id = 10;
  r.title = criterion_title(10);
  const std::vector<std::pair<std::vector<std::string>, std::string>> goldens = {
      {{"relations", "--n", "2"}, "relations_n2.txt"},
      {{"presentation", "--family", "u", "--rank", "2"}, "presentation_u2.txt"},
      {{"map", "--kind", "tensor-line", "--rank", "1"}, "map_tensor_line.txt"},
  };
  int same = 0;
  for (const auto& [args, file] : goldens) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    std::string expected = slurp(dir + "/" + file);
    if (code == 0 && !expected.empty() && out.str() == expected) ++same;
    else r.notes.push_back(file + " differs");
  }
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  int code = cli::run({"verify", "--suite", "all"}, out, err);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool fast = secs < 300;
  if (code != 0) r.notes.push_back("verify --suite all reports failing criteria (see 2, 4, 5, 6 above)");
  std::ostringstream s;
  s << same << "/3 goldens identical; verify --suite all exits " << code << (fast ? " within" : " after")
    << " 5 minutes";
  r.summary = s.str();
  r.pass = same == 3 && code == 0 && fast;
  return r;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string golden_dir, known;
  int threads = 1;
  app.add_option("--golden", golden_dir, "Directory with the CLI goldens")->required()->check(CLI::ExistingDirectory);
  app.add_option("--known-failures", known, "Comma-separated criteria expected to fail");
  app.add_option("--parallel", threads)->check(CLI::Range(1, 256));
  CLI11_PARSE(app, argc, argv);

  std::set<int> failing;
  for (int id = 1; id <= 10; ++id) {
    CriterionResult r = id == 10 ? cli_goldens(golden_dir) : run_criterion(id, threads);
    if (!r.pass) failing.insert(id);
    std::cout << to_text(r) << std::endl;
  }
  std::set<int> expected = parse_list(known);
  std::cout << 10 - failing.size() << "/10 criteria pass";
  if (!known.empty()) std::cout << (failing == expected ? "; failures match the documented set" : "; failures differ from the documented set " + known);
  std::cout << std::endl;
  return failing == expected ? 0 : 1;
}
