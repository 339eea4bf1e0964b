#include "equichar/presentations.hpp"

#include "equichar/linalg.hpp"

#include <algorithm>

namespace equichar {

std::string family_name(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::Sp: return "Sp";
    case Family::SO: return "SO";
    case Family::O: return "O";
    case Family::SU: return "SU";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "u") return Family::U;
  if (t == "sp") return Family::Sp;
  if (t == "so") return Family::SO;
  if (t == "o" || t == "o_odd") return Family::O;
  if (t == "su") return Family::SU;
  throw MathError("unknown family '" + s + "' (expected u, sp, so, o or su)");
}

std::string group_name(const GroupId& g) {
  return family_name(g.family) + "(" + std::to_string(g.rank) + ")";
}

const Generator& Presentation::generator(const std::string& name) const {
  for (auto& g : generators)
    if (g.name == name) return g;
  throw MathError("no generator named " + name + " in " + group_name(group));
}

TorusPolynomial evaluate(const Presentation& p, const GeneratorPolynomial& f) {
  int nv = p.model.nvars();
  TorusPolynomial r(nv, Ring::A);
  for (auto& [m, c] : f.terms()) {
    TorusPolynomial t = TorusPolynomial::constant(nv, Ring::A, c);
    for (auto& g : m) {
      auto it = p.images.find(g);
      if (it == p.images.end()) throw MathError("symbol " + to_text(g, p.letters) + " has no torus image");
      t = t * it->second;
    }
    r += t;
  }
  return r;
}

namespace {

constexpr int kMaxRank = 4;

GeneratorPolynomial gen(const Symbol& g) {
  return GeneratorPolynomial::monomial(Ring::A, {g});
}

GeneratorPolynomial u_binomial(int k) {
  GeneratorPolynomial u = gen(Symbol::gamma(0, 1));
  GeneratorPolynomial r = GeneratorPolynomial::constant(Ring::A, Burnside(1));
  Rational fact = 1;
  for (int l = 0; l < k; ++l) {
    r = r * (u - GeneratorPolynomial::constant(Ring::A, Burnside(l)));
    fact *= l + 1;
  }
  return Burnside(Rational(1) / fact) * r;
}

std::string relation_text(const GenMonomial& lhs, const GeneratorPolynomial& lead, const GeneratorPolynomial& tail,
                          const std::vector<Letters>& sides) {
  std::string rhs = to_text(lead, sides);
  std::string rest = to_text(tail, sides);
  if (lead.is_zero()) rhs = rest;
  else if (!tail.is_zero()) rhs += rest[0] == '-' ? " - " + rest.substr(1) : " + " + rest;
  return to_text(lhs, sides) + " = " + rhs;
}

struct Spec {
  BlockKind kind;
  int n;            // torus rank
  bool delta;
  bool chi;
  Letters letters;
  int deg_unit;     // cohomological degree of gamma_{1,*}
  GroupKind weyl;
  std::string bottom;  // underlying name for e_i
};

Spec spec_for(const GroupId& g) {
  switch (g.family) {
    case Family::U:
      return {BlockKind::Plain, g.rank, false, false, Letters::U, 2, GroupKind::SigmaN, "c"};
    case Family::SU:
      return {BlockKind::Plain, g.rank, false, false, Letters::U, 2, GroupKind::SigmaN, "c"};
    case Family::Sp:
      return {BlockKind::Squared, g.rank, false, false, Letters::Sp, 4, GroupKind::HyperoctahedralWreath, "k"};
    case Family::SO:
      if (g.rank % 2)
        return {BlockKind::Squared, g.rank / 2, false, false, Letters::SO, 4, GroupKind::HyperoctahedralWreath, "p"};
      return {BlockKind::Even, g.rank / 2, false, true, Letters::SO, 4, GroupKind::EvenSignSubgroup, "p"};
    case Family::O:
      return {BlockKind::Squared, (g.rank - 1) / 2, true, false, Letters::SO, 4, GroupKind::HyperoctahedralWreath, "p"};
  }
  throw MathError("unknown family");
}

void check_rank(const GroupId& g) {
  int r = g.rank;
  switch (g.family) {
    case Family::U:
    case Family::Sp:
      if (r < 1 || r > kMaxRank) throw MathError("unsupported rank " + std::to_string(r) + " for " + family_name(g.family));
      break;
    case Family::SU:
      if (r < 2) throw MathError("SU needs rank >= 2");
      if (r > kMaxRank) throw MathError("unsupported rank " + std::to_string(r) + " for SU");
      break;
    case Family::SO:
      if (r < 1 || r > 2 * kMaxRank + 1) throw MathError("unsupported rank " + std::to_string(r) + " for SO");
      break;
    case Family::O:
      if (r == 2 || r == 4) break;
      if (r < 1 || r % 2 == 0 || r > 2 * kMaxRank + 1)
        throw MathError("O(" + std::to_string(r) + ") is not constructible; supported: odd ranks, 2 and 4");
      break;
  }
}

// Ring map on gamma symbols that replaces e_n by chi^2.
std::map<Symbol, GeneratorPolynomial> chi_square_map(const GeneratorPolynomial& p, int n) {
  std::map<Symbol, GeneratorPolynomial> images;
  Symbol top = Symbol::gamma(n, 0);
  for (auto& [m, c] : p.terms())
    for (auto& g : m) {
      if (g == top) images.emplace(g, GeneratorPolynomial::monomial(Ring::A, {Symbol::chi(), Symbol::chi()}));
      else images.emplace(g, gen(g));
    }
  return images;
}

void add_base(Presentation& P, const Spec& sp, const RelationCache* cache, int threads) {
  int n = sp.n;
  std::vector<Letters> sides{sp.letters};
  auto add_gen = [&](const Symbol& g, int degree) {
    P.generators.push_back({to_text(g, sp.letters), g, degree, P.images.at(g)});
  };
  if (n >= 1) {
    for (int k = 1; k <= n; ++k) P.images.emplace(Symbol::gamma(0, k), P.model.expand(Symbol::gamma(0, k)));
    for (int s = 1; s <= n; ++s)
      for (int j = 0; s + j <= n; ++j) P.images.emplace(Symbol::gamma(s, j), P.model.expand(Symbol::gamma(s, j)));
  }
  if (sp.chi) P.images.emplace(Symbol::chi(), P.model.expand(Symbol::chi()));
  if (sp.delta) P.images.emplace(Symbol::delta(), P.model.expand(Symbol::delta()));

  if (n >= 1) add_gen(Symbol::gamma(0, 1), 0);
  if (sp.delta) add_gen(Symbol::delta(), 0);
  int top_e = sp.chi ? n - 1 : n;
  for (int s = 1; s <= top_e; ++s) add_gen(Symbol::gamma(s, 0), sp.deg_unit * s);
  if (sp.chi) add_gen(Symbol::chi(), 2 * n);
  for (int s = 1; s < n; ++s)
    for (int j = 1; s + j <= n; ++j) add_gen(Symbol::gamma(s, j), sp.deg_unit * s);

  for (int k = 2; k <= n; ++k) {
    GeneratorPolynomial rhs = u_binomial(k);
    P.relations.push_back({to_text(Symbol::gamma(0, k), sp.letters) + " = " + to_text(rhs, sides),
                           gen(Symbol::gamma(0, k)), rhs});
  }
  if (sp.chi)
    P.relations.push_back({to_text(Symbol::gamma(n, 0), sp.letters) + " = chi^2", gen(Symbol::gamma(n, 0)),
                           GeneratorPolynomial::monomial(Ring::A, {Symbol::chi(), Symbol::chi()})});
  GeneratorPolynomial zero(Ring::A);
  for (auto& g : P.generators) {
    if (!g.symbol.x_killed()) continue;
    P.relations.push_back({"x*" + g.name + " = 0", Burnside::x() * gen(g.symbol), zero});
  }
  if (sp.delta)
    P.relations.push_back({"delta^2 = delta", GeneratorPolynomial::monomial(Ring::A, {Symbol::delta(), Symbol::delta()}),
                           gen(Symbol::delta())});
  if (n < 1) return;
  for (auto& r : relation_set(n, threads, cache)) {
    // (s, i, s, j) and (s, j, s, i) are the same product.
    if (r.s == r.t && r.i > r.j) continue;
    GeneratorPolynomial lhs = GeneratorPolynomial::monomial(Ring::A, r.lhs());
    GeneratorPolynomial lead = GeneratorPolynomial::monomial(Ring::A, r.leading_product, Burnside(r.leading_coeff));
    GeneratorPolynomial tail = r.tail.promote();
    if (sp.chi) {
      tail = compose(tail, chi_square_map(tail, n), Ring::A);
      lead = compose(lead, chi_square_map(lead, n), Ring::A);
    }
    P.relations.push_back({relation_text(r.lhs(), lead, tail, sides), lhs, lead + tail});
  }
}

void add_restriction(Presentation& P, const Spec& sp) {
  P.restriction.push_back({"x", "2"});
  P.restriction.push_back({"y", "0"});
  for (auto& g : P.generators) {
    std::string img = "0";
    if (g.symbol.cat == Symbol::E) img = sp.bottom + std::to_string(g.symbol.s);
    if (g.symbol.cat == Symbol::Chi) img = "chi";
    P.restriction.push_back({g.name, img});
  }
}

GeneratorPolynomial one_minus(const Symbol& g) {
  return GeneratorPolynomial::constant(Ring::A, Burnside(1)) - gen(g);
}

}  // namespace

TorusModel torus_model(const GroupId& g) {
  check_rank(g);
  if (g.family == Family::SU || (g.family == Family::O && g.rank % 2 == 0))
    throw MathError("no torus model for " + group_name(g));
  Spec sp = spec_for(g);
  return TorusModel({Block{sp.n, sp.kind, sp.delta}}, Ring::A);
}

Letters letters_for(Family f) {
  switch (f) {
    case Family::Sp: return Letters::Sp;
    case Family::SO:
    case Family::O: return Letters::SO;
    default: return Letters::U;
  }
}

SubstitutionMap su_substitution(int n) {
  if (n < 2 || n > kMaxRank) throw MathError("SU substitution needs 2 <= n <= " + std::to_string(kMaxRank));
  int m = n - 1;
  std::vector<TorusPolynomial> w, u;
  TorusPolynomial last_w(m, Ring::A);
  for (int i = 0; i < m; ++i) {
    w.push_back(TorusPolynomial::w(m, Ring::A, i));
    u.push_back(TorusPolynomial::u(m, Ring::A, i));
    last_w -= TorusPolynomial::w(m, Ring::A, i);
  }
  // u_n = ((-1)^{n+1} + 1)/2 y + (-1)^n sum_i (-2)^{i-1} sigma_i(u_1..u_{n-1})
  TorusPolynomial last_u = TorusPolynomial::constant(m, Ring::A, Burnside::y() * Burnside(n % 2 ? 1 : 0));
  long sign = n % 2 ? -1 : 1;
  long pow2 = 1;
  for (int i = 1; i <= m; ++i) {
    last_u += gamma_expand(0, i, m, Ring::A) * Burnside(sign * pow2);
    pow2 *= -2;
  }
  w.push_back(last_w);
  u.push_back(last_u);
  return SubstitutionMap(n, m, w, u);
}

Presentation presentation(const GroupId& g, const RelationCache* cache, int threads) {
  check_rank(g);
  Presentation P;
  P.group = g;
  if (g.family == Family::O && g.rank % 2 == 0) {
    // O(2n) as a quotient of O(2n+1).
    Presentation base = presentation({Family::O, g.rank + 1}, cache, threads);
    P = base;
    P.group = g;
    Symbol u = Symbol::gamma(0, 1), d = Symbol::delta();
    GeneratorPolynomial U = gen(u), D = gen(d), one = GeneratorPolynomial::constant(Ring::A, Burnside(1));
    GeneratorPolynomial Y = GeneratorPolynomial::constant(Ring::A, Burnside::y());
    std::vector<Letters> sides{Letters::SO};
    auto add_q = [&](const GeneratorPolynomial& lhs, const GeneratorPolynomial& rhs) {
      P.relations.push_back({to_text(lhs, sides) + " = " + to_text(rhs, sides), lhs, rhs, true});
      P.quotient.push_back(lhs - rhs);
    };
    if (g.rank == 2) {
      add_q(U * D, U);
      add_q(Y * gen(Symbol::gamma(1, 0)), D * gen(Symbol::gamma(1, 0)));
    } else {
      GeneratorPolynomial zero(Ring::A);
      add_q(U * (U - one) * one_minus(d), zero);
      add_q(gen(Symbol::gamma(1, 0)) * U * U * one_minus(d), zero);
      add_q(gen(Symbol::gamma(2, 0)) * (Y - D - U + U * D), zero);
    }
    return P;
  }
  Spec sp = spec_for(g);
  P.letters = sp.letters;
  P.torus_rank = sp.n;
  if (g.family == Family::SU) {
    P.model = TorusModel::unitary(g.rank, Ring::A);
    add_base(P, sp, cache, threads);
    SubstitutionMap S = su_substitution(g.rank);
    P.model = TorusModel::unitary(g.rank - 1, Ring::A);
    for (auto& [sym, img] : P.images) img = substitute(S, img);
    for (auto& gg : P.generators) gg.torus_image = P.images.at(gg.symbol);
    P.weyl_kind = GroupKind::SigmaN;
    P.weyl_rank = g.rank - 1;
    P.torus_rank = g.rank - 1;
    GeneratorPolynomial zero(Ring::A);
    P.relations.push_back({"e1 = 0", gen(Symbol::gamma(1, 0)), zero});
    Symbol top = Symbol::gamma(1, g.rank - 1);
    P.relations.push_back({to_text(top) + " = 0", gen(top), zero});
    if (g.rank == 2) {
      GeneratorPolynomial U = gen(Symbol::gamma(0, 1));
      P.relations.push_back({"u^2 = 2 u", U * U, Burnside(2) * U});
    }
    P.relations_complete = g.rank == 2;
    add_restriction(P, sp);
    return P;
  }
  P.model = TorusModel({Block{sp.n, sp.kind, sp.delta}}, Ring::A);
  P.weyl_kind = sp.weyl;
  P.weyl_rank = sp.n;
  add_base(P, sp, cache, threads);
  add_restriction(P, sp);
  return P;
}

std::map<std::string, TorusPolynomial> torus_realization(const GroupId& g) {
  std::map<std::string, TorusPolynomial> out;
  for (auto& gen : presentation(g).generators) out.emplace(gen.name, gen.torus_image);
  return out;
}

TorusPolynomial res_torus(const TorusPolynomial& p) {
  TorusPolynomial xs = p.ring() == Ring::A ? p.x_side() : p;
  TorusPolynomial r(p.n(), Ring::Q);
  for (auto& [m, c] : xs.terms())
    if (m.eps == 0) r.add_term(m, c);
  return r;
}

TorusPolynomial tr_torus(const TorusPolynomial& a) {
  if (!a.u_free()) throw MathError("transfer expects an underlying (u-free) class");
  TorusPolynomial b = a.ring() == Ring::A ? a : a.promote();
  return b * Burnside::x();
}

RestrictionData restriction(const GroupId& g) {
  Presentation P = presentation(g);
  RestrictionData R;
  R.res = P.restriction;
  R.split = true;
  R.tr_res_is_x = true;
  Spec sp = spec_for(g.family == Family::O && g.rank % 2 == 0 ? GroupId{Family::O, g.rank + 1} : g);
  int nv = P.model.nvars();
  for (auto& gen : P.generators) {
    TorusPolynomial r = res_torus(gen.torus_image);
    const Symbol& s = gen.symbol;
    if (s.cat == Symbol::E || s.cat == Symbol::Chi) {
      std::string c = s.cat == Symbol::Chi ? "chi" : sp.bottom + std::to_string(s.s);
      R.section.push_back({c, gen.name});
      // The underlying class computed directly on the torus.
      TorusPolynomial expect(nv, Ring::Q);
      if (g.family == Family::SU) {
        expect = res_torus(gen.torus_image);  // no independent model of the SU torus classes
      } else if (s.cat == Symbol::Chi) {
        Monomial m;
        for (int k = 0; k < sp.n; ++k) m.a[k] = 1;
        expect.add_term(m, Burnside(1));
      } else {
        int power = sp.kind == BlockKind::Plain ? 1 : 2;
        TorusPolynomial sigma = gamma_expand(s.s, 0, sp.n);
        for (auto& [lm, c2] : sigma.terms()) {
          Monomial m;
          for (int k = 0; k < sp.n; ++k) m.a[k] = uint8_t(lm.a[k] * power);
          expect.add_term(m, c2);
        }
      }
      if (!(r == expect)) R.split = false;
    } else if (!r.is_zero()) {
      R.split = false;
    }
    if (!(tr_torus(r) == gen.torus_image * Burnside::x())) R.tr_res_is_x = false;
  }
  return R;
}

RelationReport verify_relations(const Presentation& p) {
  RelationReport rep;
  for (auto& r : p.relations) {
    if (r.quotient) continue;
    ++rep.checked;
    if (!(evaluate(p, r.lhs) == evaluate(p, r.rhs))) rep.failures.push_back(r.text);
  }
  return rep;
}

bool verify_invariance(const Presentation& p) {
  if (p.weyl_rank == 0) return true;
  GroupAction W = p.weyl();
  for (auto& g : p.generators)
    if (!is_invariant(g.torus_image, W)) return false;
  return true;
}

namespace {

unsigned long basis_count(int n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return basis(n, d).size();
}

unsigned long weighted_count(int n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 2 : 0;
  return weighted_basis_count(n, d);
}

// dim H^{2m}_G(B_G O(N)) from the fixed points: x-part plus sum over BO(a) x BO(N-a).
unsigned long orthogonal_fixed_point_dim(int N, int m) {
  if (m % 2) return 0;
  int d = m / 2;
  unsigned long total = partition_p(N / 2, d);
  for (int a = 0; a <= N; ++a)
    for (int d1 = 0; d1 <= d; ++d1) total += partition_p(a / 2, d1) * partition_p((N - a) / 2, d - d1);
  return total;
}

// Q-basis of the degree-m piece of the O(2n+1) ring, as torus polynomials.
std::vector<TorusPolynomial> odd_orthogonal_basis(const Presentation& P, int n, int m) {
  std::vector<TorusPolynomial> out;
  if (m < 0 || m % 2) return out;
  int d = m / 2;
  TorusPolynomial delta = P.model.expand(Symbol::delta());
  std::vector<GenMonomial> monos;
  if (n == 0) {
    if (d == 0) monos.push_back({});
  } else {
    for (auto& b : basis(n, d)) monos.push_back(b.monomial());
  }
  for (auto& mono : monos) {
    TorusPolynomial e = P.model.expand(mono);
    out.push_back(e);
    if (std::none_of(mono.begin(), mono.end(), [](const Symbol& s) { return s.x_killed(); }))
      out.push_back(e * Burnside::x());
    out.push_back(e * delta);
  }
  return out;
}

}  // namespace

DimensionPair graded_dimensions(const GroupId& g, int m) {
  check_rank(g);
  if (m < 0) throw MathError("negative degree");
  if (m > 8) throw MathError("degree bound exceeded (max 8)");
  DimensionPair r;
  int n;
  switch (g.family) {
    case Family::U:
      n = g.rank;
      r.presentation = weighted_count(n, m);
      r.oracle = invariant_dimension(GroupAction(GroupKind::SigmaN, n), n, m, Ring::A);
      r.formula = dim_u(n, m);
      break;
    case Family::Sp:
      n = g.rank;
      r.presentation = m % 2 ? 0 : weighted_count(n, m / 2);
      r.oracle = invariant_dimension(GroupAction(GroupKind::HyperoctahedralWreath, n), n, m, Ring::A);
      break;
    case Family::SO:
      n = g.rank / 2;
      if (g.rank % 2) {
        r.presentation = m % 2 ? 0 : weighted_count(n, m / 2);
        r.oracle = n == 0 ? (m == 0 ? 2 : 0)
                          : invariant_dimension(GroupAction(GroupKind::HyperoctahedralWreath, n), n, m, Ring::A);
      } else {
        r.presentation = (m % 2 ? 0 : weighted_count(n, m / 2)) + ((m - n) >= 0 && (m - n) % 2 == 0
                                                                      ? weighted_count(n, (m - n) / 2)
                                                                      : 0);
        r.oracle = invariant_dimension(GroupAction(GroupKind::EvenSignSubgroup, n), n, m, Ring::A);
      }
      break;
    case Family::O:
      if (g.rank % 2) {
        n = (g.rank - 1) / 2;
        r.presentation = m % 2 ? 0 : weighted_count(n, m / 2) + basis_count(n, m / 2);
      } else {
        n = g.rank / 2;
        Presentation P = presentation(g);
        auto full = odd_orthogonal_basis(P, n, m);
        MonomialIndex idx;
        RowReducer rr;
        for (auto& q : P.quotient) {
          TorusPolynomial e = evaluate(P, q);
          auto deg = e.homogeneous_degree();
          if (!deg) throw MathError("quotient relation is not homogeneous");
          for (auto& b : odd_orthogonal_basis(P, n, m - *deg)) rr.add(idx.vectorize(e * b));
        }
        r.presentation = full.size() - rr.rank();
      }
      r.oracle = orthogonal_fixed_point_dim(g.rank, m);
      break;
    case Family::SU:
      throw MathError("graded dimensions are not available for SU (the relation list is not known to be complete)");
  }
  return r;
}

unsigned long graded_dimension(const GroupId& g, int m) {
  DimensionPair r = graded_dimensions(g, m);
  if (!r.agree())
    throw MathError("dimension mismatch for " + group_name(g) + " in degree " + std::to_string(m) + ": presentation " +
                    std::to_string(r.presentation) + ", oracle " + std::to_string(r.oracle));
  return r.presentation;
}

bool SuReport::ok() const {
  bool base = e1_vanishes && top_gamma_vanishes;
  if (n == 2) base = base && u_squared_is_2u.value_or(false) && sp1_ring_map.value_or(false);
  return base;
}

SuReport su_check(int n) {
  if (n != 2 && n != 3) throw MathError("su_check supports n = 2 or 3");
  SuReport rep;
  rep.n = n;
  SubstitutionMap S = su_substitution(n);
  auto img = [&](int s, int i) { return substitute(S, gamma_expand(s, i, n, Ring::A)); };
  rep.e1_vanishes = img(1, 0).is_zero();
  rep.top_gamma_vanishes = img(1, n - 1).is_zero();
  if (n == 2) {
    TorusPolynomial u = img(0, 1);
    rep.u_squared_is_2u = u * u == u * Burnside(2);
    Presentation su = presentation({Family::SU, 2});
    Presentation sp = presentation({Family::Sp, 1});
    Symbol U = Symbol::gamma(0, 1), E1 = Symbol::gamma(1, 0), E2 = Symbol::gamma(2, 0), G11 = Symbol::gamma(1, 1),
           G02 = Symbol::gamma(0, 2), K1 = Symbol::gamma(1, 0);
    auto ring_map = [&](const Burnside& sign) {
      std::map<Symbol, GeneratorPolynomial> phi;
      GeneratorPolynomial two_u = Burnside(2) * gen(U);
      phi.emplace(U, two_u);
      phi.emplace(E1, GeneratorPolynomial(Ring::A));
      phi.emplace(E2, sign * gen(K1));
      phi.emplace(G11, GeneratorPolynomial(Ring::A));
      phi.emplace(G02, compose(u_binomial(2), {{U, two_u}}, Ring::A));
      for (auto& r : su.relations)
        if (!evaluate(sp, compose(r.lhs - r.rhs, phi, Ring::A)).is_zero()) return false;
      return true;
    };
    rep.sp1_ring_map = ring_map(Burnside(1));
    rep.sp1_torus_ring_map = ring_map(Burnside(-1));
    GeneratorPolynomial e2 = decompose(su.images.at(E2), sp.model);
    rep.e2_torus_image = to_text(e2, {Letters::Sp});
  }
  return rep;
}

}  // namespace equichar
