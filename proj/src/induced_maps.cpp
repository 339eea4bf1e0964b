#include "equichar/induced_maps.hpp"

#include "equichar/linalg.hpp"

#include <functional>

namespace equichar {

namespace {

const std::vector<std::pair<MapKind, std::string>> kKindNames = {
    {MapKind::OplusOne, "oplus-one"},
    {MapKind::OplusSigma, "oplus-sigma"},
    {MapKind::OplusTwoSigma, "oplus-two-sigma"},
    {MapKind::WhitneySum, "whitney-sum"},
    {MapKind::TensorLine, "tensor-line"},
    {MapKind::Conjugation, "conjugation"},
    {MapKind::ForgetSpToU, "forget-sp-u"},
    {MapKind::QuatUToSp, "quat-u-sp"},
    {MapKind::ComplexifySOToU, "complexify-so-u"},
    {MapKind::ForgetUToSO, "forget-u-so"},
};

TorusPolynomial wv(int nv, int i) { return TorusPolynomial::w(nv, Ring::A, i); }
TorusPolynomial uv(int nv, int i) { return TorusPolynomial::u(nv, Ring::A, i); }
TorusPolynomial cst(int nv, const Burnside& c) { return TorusPolynomial::constant(nv, Ring::A, c); }

void require(bool ok, const std::string& what) {
  if (!ok) throw MathError(what);
}

// Drops the last variable pair: w -> 0, u -> last_u.
SubstitutionMap drop_last(int source_n, const Burnside& last_u) {
  int t = source_n - 1;
  std::vector<TorusPolynomial> w, u;
  for (int i = 0; i < t; ++i) {
    w.push_back(wv(t, i));
    u.push_back(uv(t, i));
  }
  w.push_back(TorusPolynomial(t, Ring::A));
  u.push_back(cst(t, last_u));
  return SubstitutionMap(source_n, t, w, u);
}

// Source variable k goes to (target variable, sign).
SubstitutionMap fold(int source_n, int target_n, const std::function<std::pair<int, int>(int)>& where) {
  std::vector<TorusPolynomial> w, u;
  for (int k = 0; k < source_n; ++k) {
    auto [t, sign] = where(k);
    w.push_back(wv(target_n, t) * Burnside(sign));
    u.push_back(uv(target_n, t));
  }
  return SubstitutionMap(source_n, target_n, w, u);
}

// Generators of a target factor; e_0 = 1, gamma_{s,0} = y e_s, gamma_{0,j} the u-binomial, 0 out of range.
struct Conv {
  int r;
  int side;

  GeneratorPolynomial g(int s, int j) const { return GeneratorPolynomial::monomial(Ring::A, {Symbol::gamma(s, j, side)}); }
  GeneratorPolynomial one() const { return GeneratorPolynomial::constant(Ring::A, Burnside(1)); }
  GeneratorPolynomial zero() const { return GeneratorPolynomial(Ring::A); }
  GeneratorPolynomial u() const { return r >= 1 ? g(0, 1) : zero(); }

  GeneratorPolynomial e(int a) const {
    if (a == 0) return one();
    if (a > r) return zero();
    return g(a, 0);
  }
  // gamma_{0,j} = u(u-1)...(u-j+1)/j!
  GeneratorPolynomial binom(int j) const {
    if (j > r) return zero();
    GeneratorPolynomial p = one();
    Rational fact = 1;
    for (int l = 0; l < j; ++l) {
      p = p * (u() - GeneratorPolynomial::constant(Ring::A, Burnside(l)));
      fact *= l + 1;
    }
    return Burnside(Rational(1) / fact) * p;
  }
  // gamma_{s,0} = y e_s
  GeneratorPolynomial gamma(int s, int j) const {
    if (s < 0 || j < 0) return zero();
    if (j == 0) return s == 0 ? one() : Burnside::y() * e(s);
    if (s == 0) return binom(j);
    if (s + j > r) return zero();
    return g(s, j);
  }
};

GeneratorPolynomial scaled(long k, const GeneratorPolynomial& p) { return Burnside(k) * p; }

long sign_pow(int k) { return k % 2 ? -1 : 1; }

}  // namespace

std::string map_kind_name(MapKind k) {
  for (auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

MapKind parse_map_kind(const std::string& s) {
  for (auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  std::string all;
  for (auto& [kind, name] : kKindNames) all += (all.empty() ? "" : ", ") + name;
  throw MathError("unknown map kind '" + s + "' (expected one of: " + all + ")");
}

std::vector<MapKind> all_map_kinds() {
  std::vector<MapKind> out;
  for (auto& [kind, name] : kKindNames) out.push_back(kind);
  return out;
}

MapSetup map_setup(const MapRequest& r) {
  MapSetup s;
  s.request = r;
  int n = r.n;
  auto one_target = [&](GroupId src, GroupId tgt) {
    s.source = src;
    s.target = {tgt};
    s.target_model = torus_model(tgt);
    s.sides = {letters_for(tgt.family)};
  };
  switch (r.kind) {
    case MapKind::OplusOne:
    case MapKind::OplusSigma: {
      Burnside last = r.kind == MapKind::OplusOne ? Burnside::y() : Burnside(0);
      if (r.family == Family::U || r.family == Family::Sp) {
        require(n >= 1, "stabilization needs a target rank >= 1");
        one_target({r.family, n + 1}, {r.family, n});
        s.torus_map = drop_last(n + 1, last);
      } else if (r.family == Family::SO) {
        require(r.kind == MapKind::OplusOne, "SO(n) (+) sigma is not an equivariant map; use oplus-two-sigma");
        require(n % 2 == 1, "SO (+) 1 is realized from SO(n+1) to SO(n) with n odd");
        one_target({Family::SO, n + 1}, {Family::SO, n});
        s.torus_map = drop_last(n / 2 + 1, last);
      } else {
        throw MathError("stabilization maps are defined for u, sp and so");
      }
      break;
    }
    case MapKind::OplusTwoSigma:
      require(r.family == Family::SO, "oplus-two-sigma is defined for so");
      require(n >= 1, "rank must be >= 1");
      one_target({Family::SO, n + 2}, {Family::SO, n});
      s.torus_map = drop_last(n / 2 + 1, Burnside(0));
      break;
    case MapKind::WhitneySum: {
      require(r.family == Family::U || r.family == Family::Sp, "whitney-sum is defined for u and sp");
      require(n >= 1 && r.m >= 1, "whitney-sum needs ranks n, m >= 1");
      s.source = {r.family, n + r.m};
      torus_model(s.source);
      s.target = {{r.family, n}, {r.family, r.m}};
      BlockKind kind = r.family == Family::U ? BlockKind::Plain : BlockKind::Squared;
      s.target_model = TorusModel({Block{n, kind}, Block{r.m, kind}}, Ring::A);
      Letters l = letters_for(r.family);
      s.sides = {l, l};
      s.torus_map = SubstitutionMap::identity(n + r.m, Ring::A);
      break;
    }
    case MapKind::TensorLine: {
      require(n == 1, "tensor-line is defined for rank 1");
      s.source = {Family::U, 1};
      s.target = {{Family::U, 1}, {Family::U, 1}};
      s.target_model = TorusModel({Block{1}, Block{1}}, Ring::A);
      s.sides = {Letters::U, Letters::U};
      TorusPolynomial u1 = uv(2, 0), u2 = uv(2, 1);
      TorusPolynomial uimg = cst(2, Burnside::y()) - u1 - u2 + u1 * u2 * Burnside(2);
      s.torus_map = SubstitutionMap(1, 2, {wv(2, 0) + wv(2, 1)}, {uimg});
      break;
    }
    case MapKind::Conjugation:
      one_target({Family::U, n}, {Family::U, n});
      s.torus_map = fold(n, n, [](int k) { return std::pair{k, -1}; });
      break;
    case MapKind::ForgetSpToU:
      one_target({Family::U, 2 * n}, {Family::Sp, n});
      s.torus_map = fold(2 * n, n, [n](int k) { return k < n ? std::pair{k, 1} : std::pair{k - n, -1}; });
      break;
    case MapKind::ComplexifySOToU:
      one_target({Family::U, 2 * n}, {Family::SO, 2 * n});
      s.torus_map = fold(2 * n, n, [](int k) { return std::pair{k / 2, k % 2 ? -1 : 1}; });
      break;
    case MapKind::QuatUToSp:
      one_target({Family::Sp, n}, {Family::U, n});
      s.torus_map = SubstitutionMap::identity(n, Ring::A);
      break;
    case MapKind::ForgetUToSO:
      one_target({Family::SO, 2 * n}, {Family::U, n});
      s.torus_map = SubstitutionMap::identity(n, Ring::A);
      break;
  }
  torus_model(s.source);
  return s;
}

const MapImage& RingMapResult::image(const std::string& generator) const {
  for (auto& im : images)
    if (im.generator == generator) return im;
  throw MathError("no image for generator " + generator);
}

RingMapResult induced_map(const MapRequest& r, const RelationCache* cache, int threads) {
  RingMapResult out;
  out.setup = map_setup(r);
  const MapSetup& s = out.setup;
  Presentation src = presentation(s.source, cache, threads);
  for (auto& [sym, torus] : src.images) {
    TorusPolynomial t = substitute(s.torus_map, torus);
    out.symbol_images.emplace(sym, decompose(t, s.target_model));
  }
  for (auto& g : src.generators) {
    TorusPolynomial t = substitute(s.torus_map, g.torus_image);
    out.images.push_back({g.name, g.symbol, out.symbol_images.at(g.symbol), t});
  }
  for (auto& rel : src.relations) {
    if (rel.quotient) continue;
    ++out.relations_checked;
    GeneratorPolynomial img = compose(rel.lhs - rel.rhs, out.symbol_images, Ring::A);
    if (!s.target_model.expand(img).is_zero()) out.relation_failures.push_back(rel.text);
  }
  return out;
}

RingMapResult conjugation_map(int n) { return induced_map({MapKind::Conjugation, n}); }

bool ClosedFormReport::ok() const {
  for (auto& e : entries)
    if (!e.ok) return false;
  return !entries.empty();
}

namespace {

struct Expected {
  GeneratorPolynomial poly;
  bool leading_only = false;
};

// Closed formula for the image of one source generator.
std::optional<Expected> closed_formula(const MapSetup& s, const Symbol& g) {
  const MapRequest& r = s.request;
  GroupId t0 = s.target.front();
  int rank0 = torus_model(t0).blocks().front().n;
  Conv T{rank0, 0};
  bool is_u = g.cat == Symbol::U;
  bool is_e = g.cat == Symbol::E;
  bool is_chi = g.cat == Symbol::Chi;
  int sd = g.s, j = g.i;
  auto same = [&]() -> GeneratorPolynomial {
    if (is_u) return T.u();
    if (is_e) return T.e(sd);
    return T.gamma(sd, j);
  };
  GeneratorPolynomial Y = GeneratorPolynomial::constant(Ring::A, Burnside::y());
  switch (r.kind) {
    case MapKind::OplusOne:
      if (is_chi) return Expected{T.zero()};
      if (is_u) return Expected{Y + T.u()};
      if (is_e) return Expected{T.e(sd)};
      return Expected{T.gamma(sd, j) + T.gamma(sd, j - 1)};
    case MapKind::OplusSigma:
    case MapKind::OplusTwoSigma:
      if (is_chi) return Expected{T.zero()};
      return Expected{same()};
    case MapKind::WhitneySum: {
      Conv L{s.target[0].rank, 0}, R{s.target[1].rank, 1};
      GeneratorPolynomial p(Ring::A);
      if (is_e) {
        for (int a = 0; a <= sd; ++a) p += L.e(a) * R.e(sd - a);
        return Expected{p};
      }
      int ss = is_u ? 0 : sd, jj = is_u ? 1 : j;
      for (int a = 0; a <= ss; ++a)
        for (int b = 0; b <= jj; ++b) p += L.gamma(a, b) * R.gamma(ss - a, jj - b);
      return Expected{p};
    }
    case MapKind::TensorLine: {
      Conv L{1, 0}, R{1, 1};
      if (is_u) return Expected{Y - L.u() - R.u() + Burnside(2) * (L.u() * R.u())};
      if (is_e) return Expected{L.e(1) + R.e(1)};
      return std::nullopt;
    }
    case MapKind::Conjugation:
      if (is_u) return Expected{T.u()};
      if (is_e) return Expected{scaled(sign_pow(sd), T.e(sd))};
      return Expected{scaled(sign_pow(sd), T.gamma(sd, j))};
    case MapKind::ForgetSpToU:
    case MapKind::ComplexifySOToU:
      if (is_u) return Expected{T.u()};
      if (sd % 2) return Expected{T.zero()};
      if (is_e) return Expected{scaled(sign_pow(sd / 2), T.e(sd / 2))};
      return Expected{scaled(sign_pow(sd / 2), T.gamma(sd / 2, j))};
    case MapKind::QuatUToSp:
    case MapKind::ForgetUToSO:
      if (is_u) return Expected{T.u()};
      if (is_chi) return Expected{T.e(rank0)};
      if (is_e) {
        GeneratorPolynomial p(Ring::A);
        for (int a = 0; a <= 2 * sd; ++a) p += scaled(sign_pow(a + sd), T.e(a) * T.e(2 * sd - a));
        return Expected{p};
      }
      if (sd == 1)
        return Expected{T.e(1) * T.gamma(1, j) - T.u() * T.gamma(2, j - 1) + scaled(j - 2, T.gamma(2, j)) +
                        scaled(j - 1, T.gamma(2, j - 1))};
      return Expected{T.e(sd) * T.gamma(sd, j), true};
  }
  return std::nullopt;
}

}  // namespace

ClosedFormReport verify_closed_form(const MapRequest& r) {
  ClosedFormReport rep;
  rep.request = r;
  RingMapResult res = induced_map(r);
  const MapSetup& s = res.setup;
  for (auto& im : res.images) {
    auto f = closed_formula(s, im.symbol);
    if (!f) continue;
    ClosedFormEntry e;
    e.generator = im.generator;
    e.leading_only = f->leading_only;
    e.expected = to_text(f->poly, s.sides);
    e.actual = to_text(im.image, s.sides);
    TorusPolynomial want = s.target_model.expand(f->poly);
    if (f->leading_only) {
      Monomial a = dominant_term(im.torus), b = dominant_term(want);
      e.ok = !im.torus.is_zero() && a == b && im.torus.coeff(a) == want.coeff(b);
      if (!e.ok) e.diff = "dominant terms differ: " + to_text(TorusPolynomial::monomial(im.torus.n(), Ring::A, a)) +
                          " vs " + to_text(TorusPolynomial::monomial(want.n(), Ring::A, b));
    } else {
      TorusPolynomial d = im.torus - want;
      e.ok = d.is_zero();
      if (!e.ok) e.diff = to_text(decompose(d, s.target_model), s.sides);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

bool TailReport::ok() const {
  for (auto& [name, ok] : entries)
    if (!ok) return false;
  return true;
}

TailReport compare_quaternionic_tails(int n) {
  TailReport rep;
  rep.n = n;
  RingMapResult quat = induced_map({MapKind::QuatUToSp, n});
  RingMapResult forget = induced_map({MapKind::ForgetUToSO, n});
  for (auto& im : quat.images) {
    if (im.symbol.cat != Symbol::Gamma) continue;
    auto it = forget.symbol_images.find(im.symbol);
    bool ok = it != forget.symbol_images.end() && it->second == im.image;
    rep.entries.push_back({im.generator, ok});
  }
  return rep;
}

std::vector<GeneratorPolynomial> stable_classes(int n, Family family) {
  require(n >= 2, "stable classes need n >= 2");
  require(family == Family::U || family == Family::Sp, "stable classes are implemented for u and sp");
  std::vector<GeneratorPolynomial> out;
  Conv C{n, 0};
  for (int i = 1; i < n; ++i) out.push_back(C.e(i) * C.u() - C.gamma(i, 1));
  return out;
}

bool StableReport::ok() const {
  for (auto& e : entries)
    if (!e.fixed_oplus_one || !e.fixed_oplus_sigma) return false;
  return true;
}

StableReport verify_stable_classes(int n, Family family) {
  StableReport rep;
  rep.family = family;
  rep.n = n;
  auto classes = stable_classes(n, family);
  TorusModel source = torus_model({family, n});
  TorusModel target = torus_model({family, n - 1});
  SubstitutionMap one = drop_last(n, Burnside::y()), sigma = drop_last(n, Burnside(0));
  Conv C{n - 1, 0};
  for (int i = 1; i < n; ++i) {
    TorusPolynomial t = source.expand(classes[i - 1]);
    TorusPolynomial want = target.expand(C.e(i) * C.u() - C.gamma(i, 1));
    StableEntry e;
    e.i = i;
    e.text = to_text(classes[i - 1], {letters_for(family)});
    e.fixed_oplus_one = substitute(one, t) == want;
    e.fixed_oplus_sigma = substitute(sigma, t) == want;
    rep.entries.push_back(e);
  }
  return rep;
}

bool ForgetStableReport::ok() const {
  for (auto& e : entries)
    if (!e.ok) return false;
  return true;
}

ForgetStableReport forget_stable_classes(int n) {
  ForgetStableReport rep;
  rep.n = n;
  MapSetup s = map_setup({MapKind::ForgetSpToU, n});
  auto classes = stable_classes(2 * n);
  TorusModel source = torus_model(s.source);
  Conv K{n, 0};
  for (int i = 1; i < 2 * n; ++i) {
    TorusPolynomial t = substitute(s.torus_map, source.expand(classes[i - 1]));
    GeneratorPolynomial want = i % 2 ? K.zero() : scaled(sign_pow(i / 2), K.e(i / 2) * K.u() - K.gamma(i / 2, 1));
    ForgetStableEntry e;
    e.i = i;
    e.expected = to_text(want, s.sides);
    e.actual = to_text(decompose(t, s.target_model), s.sides);
    e.ok = t == s.target_model.expand(want);
    rep.entries.push_back(e);
  }
  return rep;
}

std::vector<ConjectureDegree> conjecture_evidence(int n, int max_degree) {
  require(n >= 1 && n <= 4, "conjecture evidence supports 1 <= n <= 4");
  require(max_degree >= 0 && max_degree <= 6, "conjecture evidence supports degrees up to 6");
  TorusModel model = torus_model({Family::U, n});
  Conv C{n, 0};
  // Letters: e_1..e_n of degree 1..n, then c_1..c_{n-1} of degree 1..n-1.
  std::vector<TorusPolynomial> letters;
  std::vector<int> degree;
  for (int i = 1; i <= n; ++i) {
    letters.push_back(model.expand(C.e(i)));
    degree.push_back(i);
  }
  for (int i = 1; i < n; ++i) {
    letters.push_back(model.expand(C.e(i) * C.u() - C.gamma(i, 1)));
    degree.push_back(i);
  }
  int nletters = int(letters.size());
  std::vector<ConjectureDegree> out;
  for (int d = 0; d <= max_degree; ++d) {
    MonomialIndex idx;
    RowReducer rr;
    ConjectureDegree cd;
    cd.degree = d;
    std::function<void(int, int, TorusPolynomial, bool)> walk = [&](int k, int left, TorusPolynomial acc, bool pure) {
      if (left == 0) {
        ++cd.products;
        rr.add(idx.vectorize(acc));
        if (pure) {
          ++cd.products;
          rr.add(idx.vectorize(acc * Burnside::x()));
        }
        return;
      }
      if (k == nletters) return;
      walk(k + 1, left, acc, pure);
      for (int e = 1; e * degree[k] <= left; ++e) {
        acc = acc * letters[k];
        walk(k + 1, left - e * degree[k], acc, pure && k < n);
      }
    };
    walk(0, d, TorusPolynomial::constant(model.nvars(), Ring::A, Burnside(1)), true);
    cd.rank = rr.rank();
    out.push_back(cd);
  }
  return out;
}

}  // namespace equichar
