#include "equichar/symmetric_algebra.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace equichar {

using json = nlohmann::ordered_json;

std::optional<RelationCache> RelationCache::from_env() {
  const char* dir = std::getenv("EQUICHAR_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return RelationCache(dir);
}

std::string RelationCache::key(int s, int i, int t, int j, int n) {
  return "rel/n" + std::to_string(n) + "/s" + std::to_string(s) + "i" + std::to_string(i) + "t" +
         std::to_string(t) + "j" + std::to_string(j);
}

std::optional<GeneratorPolynomial> RelationCache::load(int s, int i, int t, int j, int n) const {
  std::ifstream in(root_ / (key(s, i, t, j, n) + ".json"));
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.at("key") != key(s, i, t, j, n)) return std::nullopt;
    GeneratorPolynomial p(Ring::Q);
    for (auto& term : doc.at("terms")) {
      GenMonomial m;
      for (auto& f : term.at("factors")) m.push_back(Symbol::gamma(f.at(0).get<int>(), f.at(1).get<int>()));
      std::sort(m.begin(), m.end());
      p.add_term(m, Burnside(parse_rational(term.at("coeff").get<std::string>())));
    }
    return p;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void RelationCache::store(int s, int i, int t, int j, int n, const GeneratorPolynomial& rhs) const {
  json doc;
  doc["key"] = key(s, i, t, j, n);
  json terms = json::array();
  for (auto& [m, c] : rhs.terms()) {
    json factors = json::array();
    for (auto& g : m) factors.push_back({int(g.s), int(g.i)});
    terms.push_back({{"factors", factors}, {"coeff", to_string(c.q)}});
  }
  doc["terms"] = terms;

  std::filesystem::path target = root_ / (key(s, i, t, j, n) + ".json");
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  std::filesystem::path tmp = target.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort
    out << doc.dump(2) << "\n";
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace equichar
