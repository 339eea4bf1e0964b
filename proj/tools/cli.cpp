#include "cli.hpp"

#include "equichar/induced_maps.hpp"
#include "equichar/presentations.hpp"
#include "equichar/stems.hpp"
#include "equichar/symmetric_algebra.hpp"
#include "equichar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace equichar::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  Json doc;
  int code = 0;
};

std::optional<RelationCache> open_cache(const std::string& dir) {
  if (!dir.empty()) return RelationCache(dir);
  return RelationCache::from_env();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

// decompose

struct DecomposeArgs {
  int n = 1;
  std::string input, expr;
};

Output do_decompose(const DecomposeArgs& a) {
  if (a.expr.empty() == a.input.empty()) throw CLI::ValidationError("decompose", "give one of --input, --expr");
  std::string text = a.expr.empty() ? trim(read_file(a.input)) : a.expr;
  TorusPolynomial p = parse_torus(text, a.n, Ring::A);
  if (!is_invariant(p, GroupAction(GroupKind::SigmaN, a.n)))
    throw MathError("input is not invariant under the symmetric group on " + std::to_string(a.n) + " letters");
  GeneratorPolynomial g = decompose(p, a.n);
  Output o;
  o.doc = {{"n", a.n}, {"input", to_text(p)}, {"decomposition", to_text(g)}};
  return o;
}

void text_decompose(const Json& d, std::ostream& out) { out << d["decomposition"].get<std::string>() << "\n"; }

// relations

struct RelationsArgs {
  int n = 1;
  std::optional<int> s, i, t, j;
  std::string cache;
  int threads = 1;
};

Json relation_json(const RelationEntry& e) {
  return {{"s", e.s},
          {"i", e.i},
          {"t", e.t},
          {"j", e.j},
          {"relation", to_text(e)},
          {"leading_coefficient", to_string(e.leading_coeff)}};
}

Output do_relations(const RelationsArgs& a) {
  auto cache = open_cache(a.cache);
  const RelationCache* c = cache ? &*cache : nullptr;
  int given = a.s.has_value() + a.i.has_value() + a.t.has_value() + a.j.has_value();
  if (given != 0 && given != 4) throw CLI::ValidationError("--s --i --t --j", "give all four indices or none");
  Json list = Json::array();
  if (given == 4) {
    if (!in_relation_window(*a.s, *a.i, *a.t, *a.j, a.n))
      throw MathError("(s, i, t, j) = (" + std::to_string(*a.s) + ", " + std::to_string(*a.i) + ", " +
                      std::to_string(*a.t) + ", " + std::to_string(*a.j) + ") is outside the relation window");
    list.push_back(relation_json(relation(*a.s, *a.i, *a.t, *a.j, a.n, c)));
  } else {
    for (const auto& e : relation_set(a.n, a.threads, c)) list.push_back(relation_json(e));
  }
  Output o;
  o.doc = {{"n", a.n}, {"relations", list}};
  return o;
}

void text_relations(const Json& d, std::ostream& out) {
  for (const auto& r : d["relations"]) out << r["relation"].get<std::string>() << "\n";
}

// presentation

struct GroupArgs {
  std::string family;
  int rank = 1;
  std::string cache;
  int threads = 1;
};

Output do_presentation(const GroupArgs& a) {
  auto cache = open_cache(a.cache);
  GroupId g{parse_family(a.family), a.rank};
  Presentation p = presentation(g, cache ? &*cache : nullptr, a.threads);
  Json gens = Json::array();
  for (const auto& x : p.generators)
    gens.push_back({{"name", x.name}, {"degree", x.degree}, {"torus", to_text(x.torus_image)}});
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back({{"relation", r.text}, {"quotient", r.quotient}});
  Json res = Json::array();
  for (const auto& [from, to] : p.restriction) res.push_back({{"class", from}, {"underlying", to}});
  Output o;
  o.doc = {{"group", group_name(g)},
           {"ring", ring_name(p.ring)},
           {"torus_rank", p.torus_rank},
           {"generators", gens},
           {"relations", rels},
           {"relations_complete", p.relations_complete},
           {"restriction", res}};
  return o;
}

void text_presentation(const Json& d, std::ostream& out) {
  out << "group " << d["group"].get<std::string>() << " over " << d["ring"].get<std::string>() << ", torus rank "
      << d["torus_rank"].get<int>() << "\n";
  out << "generators\n";
  for (const auto& g : d["generators"])
    out << "  " << g["name"].get<std::string>() << "  degree " << g["degree"].get<int>() << "  "
        << g["torus"].get<std::string>() << "\n";
  out << "relations" << (d["relations_complete"].get<bool>() ? "" : " (partial)") << "\n";
  for (const auto& r : d["relations"])
    out << "  " << r["relation"].get<std::string>() << (r["quotient"].get<bool>() ? "  [quotient]" : "") << "\n";
  out << "restriction\n";
  for (const auto& r : d["restriction"])
    out << "  " << r["class"].get<std::string>() << " -> " << r["underlying"].get<std::string>() << "\n";
}

// map

struct MapArgs {
  std::string kind;
  int rank = 1;
  int rank2 = 0;
  std::string family = "u";
  int threads = 1;
};

Json group_json(const GroupId& g) { return {{"family", family_name(g.family)}, {"rank", g.rank}}; }

std::string group_text(const Json& g) {
  return "H(" + group_name({parse_family(g["family"].get<std::string>()), g["rank"].get<int>()}) + ")";
}

Json target_json(const MapSetup& s) {
  if (s.target.size() == 1) return group_json(s.target[0]);
  Json f = Json::array();
  for (const auto& g : s.target) f.push_back(group_json(g));
  return {{"factors", f}};
}

Output do_map(const MapArgs& a) {
  MapRequest r{parse_map_kind(a.kind), a.rank, a.rank2, parse_family(a.family)};
  RingMapResult m = induced_map(r, nullptr, a.threads);
  Json images = Json::array();
  for (const auto& im : m.images)
    images.push_back({{"generator", im.generator}, {"polynomial", to_text(im.image, m.setup.sides)}});
  Output o;
  o.doc = {{"kind", map_kind_name(r.kind)},
           {"source", group_json(m.setup.source)},
           {"target", target_json(m.setup)},
           {"images", images},
           {"relations_checked", m.relations_checked},
           {"respects_relations", m.respects_relations()}};
  if (!m.respects_relations()) {
    o.doc["relation_failures"] = m.relation_failures;
    o.code = 1;
  }
  return o;
}

void text_map(const Json& d, std::ostream& out) {
  std::string target;
  if (d["target"].contains("factors"))
    for (const auto& g : d["target"]["factors"]) target += (target.empty() ? "" : " (x) ") + group_text(g);
  else target = group_text(d["target"]);
  out << d["kind"].get<std::string>() << ": " << group_text(d["source"]) << " -> " << target << "\n";
  for (const auto& im : d["images"])
    out << "  " << im["generator"].get<std::string>() << " -> " << im["polynomial"].get<std::string>() << "\n";
  out << (d["respects_relations"].get<bool>() ? "respects " : "VIOLATES ")
      << d["relations_checked"].get<std::size_t>() << " relations\n";
  if (d.contains("relation_failures"))
    for (const auto& f : d["relation_failures"]) out << "  " << f.get<std::string>() << "\n";
}

// dims

struct DimsArgs {
  std::string family;
  int rank = 1;
  int max_degree = 0;
  int degree_cap = 16;
};

Output do_dims(const DimsArgs& a) {
  if (a.max_degree > a.degree_cap)
    throw CLI::ValidationError("--max-degree", "exceeds --degree-cap " + std::to_string(a.degree_cap));
  GroupId g{parse_family(a.family), a.rank};
  Json rows = Json::array();
  Output o;
  for (int m = 0; m <= a.max_degree; ++m) {
    DimensionPair d = graded_dimensions(g, m);
    Json row = {{"degree", 2 * m}, {"presentation", d.presentation}, {"oracle", d.oracle}};
    if (d.formula) row["formula"] = *d.formula;
    row["agree"] = d.agree();
    if (!d.agree()) o.code = 1;
    rows.push_back(row);
  }
  o.doc = {{"group", group_name(g)}, {"rows", rows}};
  return o;
}

void text_dims(const Json& d, std::ostream& out) {
  out << "# " << d["group"].get<std::string>() << "\n";
  out << "degree presentation oracle\n";
  for (const auto& r : d["rows"])
    out << r["degree"].get<int>() << " " << r["presentation"].get<unsigned long>() << " "
        << r["oracle"].get<unsigned long>() << (r["agree"].get<bool>() ? "" : "  MISMATCH") << "\n";
}

// basis

struct BasisArgs {
  int n = 1;
  int degree = 0;
};

Output do_basis(const BasisArgs& a) {
  Json elems = Json::array();
  for (const auto& b : basis(a.n, a.degree)) {
    GeneratorPolynomial m = GeneratorPolynomial::monomial(Ring::Q, b.monomial());
    elems.push_back(to_text(m));
  }
  Output o;
  o.doc = {{"n", a.n},
           {"degree", a.degree},
           {"size", elems.size()},
           {"weighted_size", weighted_basis_count(a.n, a.degree)},
           {"basis", elems}};
  return o;
}

void text_basis(const Json& d, std::ostream& out) {
  for (const auto& e : d["basis"]) out << e.get<std::string>() << "\n";
  out << "# " << d["size"].get<std::size_t>() << " elements, " << d["weighted_size"].get<unsigned long>()
      << " over A_Q\n";
}

// stems

struct StemsArgs {
  std::vector<std::string> mul;
  std::vector<int> group;
  std::string res, tr, weyl;
};

Json stem_json(const StemElement& e) {
  Json j = {{"element", to_text(e)}, {"level", e.level() == StemLevel::Top ? "top" : "bottom"}};
  if (auto b = e.bidegree()) j["bidegree"] = {b->k, b->n};
  return j;
}

Output do_stems(const StemsArgs& a) {
  int ops = !a.mul.empty() + !a.group.empty() + !a.res.empty() + !a.tr.empty() + !a.weyl.empty();
  if (ops != 1) throw CLI::ValidationError("stems", "give exactly one of --mul, --group, --res, --tr, --weyl");
  Output o;
  if (!a.mul.empty()) {
    StemElement x = parse_stem(a.mul[0]), y = parse_stem(a.mul[1]);
    o.doc = {{"op", "mul"}, {"args", {to_text(x), to_text(y)}}, {"result", stem_json(stem_mul(x, y))}};
  } else if (!a.group.empty()) {
    StemGroup g = stem_group(a.group[0], a.group[1]);
    Json top = Json::array(), bottom = Json::array();
    for (const auto& c : g.top) top.push_back(to_text(c));
    for (const auto& c : g.bottom) bottom.push_back(to_text(c));
    o.doc = {{"op", "group"}, {"bidegree", a.group}, {"name", g.name}, {"top", top}, {"bottom", bottom}};
  } else {
    const std::string& arg = !a.res.empty() ? a.res : !a.tr.empty() ? a.tr : a.weyl;
    StemElement x = parse_stem(arg);
    StemElement r = !a.res.empty() ? res(x) : !a.tr.empty() ? tr(x) : weyl(x);
    o.doc = {{"op", !a.res.empty() ? "res" : !a.tr.empty() ? "tr" : "weyl"},
             {"args", {to_text(x)}},
             {"result", stem_json(r)}};
  }
  return o;
}

void text_stems(const Json& d, std::ostream& out) {
  if (d["op"] == "group") {
    auto list = [](const Json& l) {
      std::string s;
      for (const auto& c : l) s += (s.empty() ? "" : ", ") + c.get<std::string>();
      return s.empty() ? std::string("0") : s;
    };
    out << "(" << d["bidegree"][0].get<int>() << ", " << d["bidegree"][1].get<int>()
        << "): " << d["name"].get<std::string>() << "\n";
    out << "  top: " << list(d["top"]) << "\n";
    out << "  bottom: " << list(d["bottom"]) << "\n";
    return;
  }
  out << d["result"]["element"].get<std::string>() << "\n";
}

// verify

struct VerifyArgs {
  std::string suite = "all";
  int threads = 1;
};

Output do_verify(const VerifyArgs& a) {
  Json results = Json::array();
  Output o;
  for (int id : suite_criteria(a.suite)) {
    CriterionResult r = run_criterion(id, a.threads);
    if (!r.pass) o.code = 1;
    results.push_back({{"criterion", r.id},
                       {"title", r.title},
                       {"pass", r.pass},
                       {"summary", r.summary},
                       {"notes", r.notes}});
  }
  o.doc = {{"suite", a.suite}, {"results", results}};
  return o;
}

void text_verify(const Json& d, std::ostream& out) {
  std::size_t pass = 0;
  for (const auto& r : d["results"]) {
    CriterionResult c;
    c.id = r["criterion"];
    c.title = r["title"];
    c.pass = r["pass"];
    c.summary = r["summary"];
    c.notes = r["notes"].get<std::vector<std::string>>();
    pass += c.pass;
    out << to_text(c) << "\n";
  }
  out << pass << "/" << d["results"].size() << " criteria pass\n";
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant characteristic classes over the rational Burnside ring", "equichar"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Write a symmetric polynomial in the generators");
  c_dec->add_option("--n", dec.n, "Number of variable pairs")->required()->check(CLI::Range(1, kMaxVars));
  auto* in_opt = c_dec->add_option("--input", dec.input, "File holding the polynomial")->check(CLI::ExistingFile);
  auto* ex_opt = c_dec->add_option("--expr", dec.expr, "Polynomial, e.g. \"w1 + w2\"");
  in_opt->excludes(ex_opt);

  RelationsArgs rel;
  auto* c_rel = app.add_subcommand("relations", "Product relations gamma_{s,i} gamma_{t,j}");
  c_rel->add_option("--n", rel.n, "Rank")->required()->check(CLI::Range(1, kMaxVars));
  c_rel->add_option("--s", rel.s);
  c_rel->add_option("--i", rel.i);
  c_rel->add_option("--t", rel.t);
  c_rel->add_option("--j", rel.j);
  c_rel->add_option("--cache", rel.cache, "Relation store directory (default $EQUICHAR_CACHE)");
  c_rel->add_option("--parallel", rel.threads, "Worker threads")->check(CLI::Range(1, 256));

  GroupArgs pre;
  auto* c_pre = app.add_subcommand("presentation", "Generators and relations of a group's ring");
  c_pre->add_option("--family", pre.family, "u, sp, so, o or su")->required();
  c_pre->add_option("--rank", pre.rank)->required()->check(CLI::NonNegativeNumber);
  c_pre->add_option("--cache", pre.cache, "Relation store directory (default $EQUICHAR_CACHE)");
  c_pre->add_option("--parallel", pre.threads, "Worker threads")->check(CLI::Range(1, 256));

  MapArgs map;
  std::string kinds;
  for (MapKind k : all_map_kinds()) kinds += (kinds.empty() ? "" : ", ") + map_kind_name(k);
  auto* c_map = app.add_subcommand("map", "Induced map on generators");
  c_map->add_option("--kind", map.kind, kinds)->required();
  c_map->add_option("--rank", map.rank)->required()->check(CLI::NonNegativeNumber);
  c_map->add_option("--rank2", map.rank2, "Second rank for whitney-sum")->check(CLI::NonNegativeNumber);
  c_map->add_option("--family", map.family, "u, sp or so for the stabilization and sum maps");
  c_map->add_option("--parallel", map.threads, "Worker threads")->check(CLI::Range(1, 256));

  DimsArgs dims;
  auto* c_dims = app.add_subcommand("dims", "Graded dimensions: presentation count against the oracle");
  c_dims->add_option("--family", dims.family, "u, sp, so or o")->required();
  c_dims->add_option("--rank", dims.rank)->required()->check(CLI::NonNegativeNumber);
  c_dims->add_option("--max-degree", dims.max_degree, "Largest torus degree m (cohomological 2m)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_dims->add_option("--degree-cap", dims.degree_cap, "Refuse larger --max-degree")->capture_default_str();

  BasisArgs bas;
  auto* c_bas = app.add_subcommand("basis", "Additive basis in a torus degree");
  c_bas->add_option("--n", bas.n)->required()->check(CLI::Range(1, kMaxVars));
  c_bas->add_option("--degree", bas.degree)->required()->check(CLI::NonNegativeNumber);

  StemsArgs st;
  auto* c_st = app.add_subcommand("stems", "Rational stable stems");
  c_st->add_option("--mul", st.mul, "Multiply two elements")->expected(2);
  c_st->add_option("--group", st.group, "Group in bidegree K N")->expected(2)->allow_extra_args(false);
  c_st->add_option("--res", st.res, "Restriction");
  c_st->add_option("--tr", st.tr, "Transfer");
  c_st->add_option("--weyl", st.weyl, "Weyl action");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run the acceptance battery");
  c_ver->add_option("--suite", ver.suite, "appendix, maps, stems or all")
      ->check(CLI::IsMember({"appendix", "maps", "stems", "all"}))
      ->capture_default_str();
  c_ver->add_option("--parallel", ver.threads, "Worker threads")->check(CLI::Range(1, 256));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->add_flag("--json", json, "Print JSON");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Output o;
    void (*text)(const Json&, std::ostream&) = nullptr;
    if (*c_dec) o = do_decompose(dec), text = text_decompose;
    else if (*c_rel) o = do_relations(rel), text = text_relations;
    else if (*c_pre) o = do_presentation(pre), text = text_presentation;
    else if (*c_map) o = do_map(map), text = text_map;
    else if (*c_dims) o = do_dims(dims), text = text_dims;
    else if (*c_bas) o = do_basis(bas), text = text_basis;
    else if (*c_st) o = do_stems(st), text = text_stems;
    else o = do_verify(ver), text = text_verify;
    if (json) out << o.doc.dump(2) << "\n";
    else text(o.doc, out);
    return o.code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace equichar::cli
