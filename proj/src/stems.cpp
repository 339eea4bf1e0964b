#include "equichar/stems.hpp"

#include "equichar/linalg.hpp"

#include <algorithm>
#include <random>
#include <regex>

namespace equichar {

Bidegree StemClass::bidegree() const {
  switch (kind) {
    case One:
    case X: return {0, 0};
    case U2s: return {2 * j, 2 * j};
    case XU2s: return {-2 * j, -2 * j};
    case As: return {0, -j};
    case YAs: return {0, j};
    case Us: return {j, j};
  }
  return {};
}

namespace {

std::string power(const std::string& base, int j) { return j == 1 ? base : base + "^" + std::to_string(j); }

}  // namespace

std::string to_text(const StemClass& c) {
  switch (c.kind) {
    case StemClass::One: return "1";
    case StemClass::X: return "x";
    case StemClass::U2s: return power("u_2s", c.j);
    case StemClass::XU2s: return "x/" + power("u_2s", c.j);
    case StemClass::As: return power("a_s", c.j);
    case StemClass::YAs: return "y/" + power("a_s", c.j);
    case StemClass::Us: return c.j == 0 ? "1" : power("u_s", c.j);
  }
  return "?";
}

StemElement StemElement::basis(const StemClass& c, const Rational& coeff) {
  StemElement e(c.level());
  e.add_term(c, coeff);
  return e;
}

StemElement StemElement::y() {
  StemElement e;
  e.add_term({StemClass::One}, 1);
  e.add_term({StemClass::X}, Rational(-1, 2));
  return e;
}

std::optional<Bidegree> StemElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.bidegree();
}

Rational StemElement::coeff(const StemClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

void StemElement::add_term(const StemClass& c, const Rational& v) {
  if (c.level() != level_) throw MathError("stem class " + to_text(c) + " is on the other level");
  if (sgn(v) == 0) return;
  if (!terms_.empty() && terms_.begin()->first.bidegree() != c.bidegree())
    throw MathError("adding stem classes of different bidegrees");
  Rational& slot = terms_[c];
  slot += v;
  if (sgn(slot) == 0) terms_.erase(c);
}

StemElement& StemElement::operator+=(const StemElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) level_ = o.level_;
  if (o.level_ != level_) throw MathError("adding stem elements of different levels");
  for (auto& [c, v] : o.terms_) add_term(c, v);
  return *this;
}

StemElement& StemElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string to_text(const StemElement& e) {
  if (e.is_zero()) return "0";
  auto& t = e.terms();
  if (t.size() == 2 && t.count({StemClass::One}) && t.count({StemClass::X}) &&
      t.at({StemClass::X}) == -t.at({StemClass::One}) / 2) {
    Rational c = t.at({StemClass::One});
    return c == 1 ? "y" : c == -1 ? "-y" : c.get_str() + " y";
  }
  std::string out;
  for (auto& [c, v] : t) {
    Rational a = abs(v);
    std::string name = to_text(c);
    std::string body = a == 1 ? name : name == "1" ? a.get_str() : a.get_str() + " " + name;
    if (out.empty()) out = sgn(v) < 0 ? "-" + body : body;
    else out += (sgn(v) < 0 ? " - " : " + ") + body;
  }
  return out;
}

StemElement parse_stem(const std::string& text) {
  static const std::regex re(R"(^\s*(?:(-?\d+(?:/\d+)?)\s*\*\s*)?(1|x|y|a_s|u_2s|x/u_2s|y/a_s|u_s)(?:\^(-?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw MathError("cannot parse stem element '" + text + "'");
  Rational coeff = m[1].matched ? Rational(m[1].str()) : Rational(1);
  coeff.canonicalize();
  std::string name = m[2];
  bool has_pow = m[3].matched;
  int j = has_pow ? std::stoi(m[3]) : 1;
  auto need_positive = [&]() {
    if (j < 1) throw MathError("exponent of " + name + " must be >= 1");
  };
  if (name == "1" || name == "x" || name == "y") {
    if (has_pow) throw MathError(name + " takes no exponent");
    if (name == "y") return StemElement::y() * coeff;
    return StemElement::basis({name == "1" ? StemClass::One : StemClass::X}, coeff);
  }
  if (name == "u_s") return StemElement::basis({StemClass::Us, j}, coeff);
  need_positive();
  StemClass::Kind k = name == "a_s" ? StemClass::As : name == "u_2s" ? StemClass::U2s
                    : name == "x/u_2s" ? StemClass::XU2s : StemClass::YAs;
  return StemElement::basis({k, j}, coeff);
}

StemGroup stem_group(int k, int n) {
  StemGroup g;
  if (k == 0 && n == 0) {
    g.name = "A_Q";
    g.top = {{StemClass::One}, {StemClass::X}};
    g.bottom = {{StemClass::Us, 0}};
  } else if (k == n && k % 2 == 0) {
    g.name = "M0";
    g.top = {k > 0 ? StemClass{StemClass::U2s, k / 2} : StemClass{StemClass::XU2s, -k / 2}};
    g.bottom = {{StemClass::Us, k}};
  } else if (k == n) {
    g.name = "M0-";
    g.bottom = {{StemClass::Us, k}};
  } else if (k == 0) {
    g.name = "M1";
    g.top = {n < 0 ? StemClass{StemClass::As, -n} : StemClass{StemClass::YAs, n}};
  } else {
    g.name = "0";
  }
  return g;
}

namespace {

using C = StemClass;

StemElement cls(C::Kind k, int j = 0, const Rational& v = 1) { return StemElement::basis({k, j}, v); }

StemElement mul_top(C a, C b) {
  if (b.kind < a.kind) std::swap(a, b);
  int i = a.j, j = b.j;
  StemElement zero;
  switch (a.kind) {
    case C::One: return cls(b.kind, b.j);
    case C::X:
      if (b.kind == C::As || b.kind == C::YAs) return zero;
      return cls(b.kind, b.j, 2);
    case C::U2s:
      if (b.kind == C::U2s) return cls(C::U2s, i + j);
      if (b.kind == C::XU2s) {
        if (i < j) return cls(C::XU2s, j - i);
        if (i == j) return cls(C::X);
        return cls(C::U2s, i - j, 2);
      }
      return zero;
    case C::XU2s:
      if (b.kind == C::XU2s) return cls(C::XU2s, i + j, 2);
      return zero;
    case C::As:
      if (b.kind == C::As) return cls(C::As, i + j);
      if (i < j) return cls(C::YAs, j - i);
      if (i == j) return StemElement::y();
      return cls(C::As, i - j);
    case C::YAs: return cls(C::YAs, i + j);
    case C::Us: break;
  }
  throw MathError("bad stem product");
}

}  // namespace

StemElement stem_mul(const StemElement& a, const StemElement& b) {
  if (a.is_zero() || b.is_zero()) return StemElement(a.is_zero() ? b.level() : a.level());
  if (a.level() != b.level()) throw MathError("stem product across levels");
  StemElement out(a.level());
  for (auto& [ca, va] : a.terms())
    for (auto& [cb, vb] : b.terms()) {
      StemElement p = a.level() == StemLevel::Bottom ? cls(C::Us, ca.j + cb.j) : mul_top(ca, cb);
      out += p * (va * vb);
    }
  return out;
}

StemElement res(const StemElement& a) {
  if (a.level() != StemLevel::Top) throw MathError("restriction takes a top-level element");
  StemElement out(StemLevel::Bottom);
  for (auto& [c, v] : a.terms()) {
    switch (c.kind) {
      case C::One: out += cls(C::Us, 0, v); break;
      case C::X: out += cls(C::Us, 0, 2 * v); break;
      case C::U2s: out += cls(C::Us, 2 * c.j, v); break;
      case C::XU2s: out += cls(C::Us, -2 * c.j, 2 * v); break;
      default: break;
    }
  }
  return out;
}

StemElement tr(const StemElement& a) {
  if (a.level() != StemLevel::Bottom) throw MathError("transfer takes a bottom-level element");
  StemElement out(StemLevel::Top);
  for (auto& [c, v] : a.terms()) {
    if (c.j % 2) continue;
    if (c.j == 0) out += cls(C::X, 0, v);
    else if (c.j > 0) out += cls(C::U2s, c.j / 2, 2 * v);
    else out += cls(C::XU2s, -c.j / 2, v);
  }
  return out;
}

StemElement weyl(const StemElement& a) {
  if (a.level() != StemLevel::Bottom) throw MathError("the Weyl action lives on the bottom level");
  StemElement out(StemLevel::Bottom);
  for (auto& [c, v] : a.terms()) out += cls(C::Us, c.j, c.j % 2 ? -v : v);
  return out;
}

namespace {

std::vector<C> top_classes(int max_j) {
  std::vector<C> out{{C::One}, {C::X}};
  for (auto k : {C::U2s, C::XU2s, C::As, C::YAs})
    for (int j = 1; j <= max_j; ++j) out.push_back({k, j});
  return out;
}

bool in_group(const StemElement& p, Bidegree d) {
  StemGroup g = stem_group(d.k, d.n);
  const auto& allowed = p.level() == StemLevel::Top ? g.top : g.bottom;
  for (auto& [c, v] : p.terms())
    if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) return false;
  return true;
}

Bidegree operator+(Bidegree a, Bidegree b) { return {a.k + b.k, a.n + b.n}; }

}  // namespace

StemReport verify_stems(int max_j, int frobenius_pairs, unsigned seed) {
  StemReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && rep.failures.size() < 20) rep.failures.push_back(what);
    flag = false;
  };
  auto top = top_classes(max_j);
  std::vector<C> bottom;
  for (int j = -2 * max_j; j <= 2 * max_j; ++j) bottom.push_back({C::Us, j});
  rep.classes = top.size() + bottom.size();
  for (auto& levels : {top, bottom}) {
    for (auto& a : levels)
      for (auto& b : levels) {
        StemElement A = StemElement::basis(a), B = StemElement::basis(b);
        StemElement ab = stem_mul(A, B);
        std::string name = to_text(a) + " * " + to_text(b);
        if (!(ab == stem_mul(B, A))) fail(rep.commutative, "not commutative: " + name);
        if (!in_group(ab, a.bidegree() + b.bidegree())) fail(rep.zero_group_coherent, "wrong group: " + name);
        if (a.level() == StemLevel::Top) {
          if (!(res(ab) == stem_mul(res(A), res(B)))) fail(rep.res_multiplicative, "Res not multiplicative: " + name);
        } else {
          if (!(weyl(ab) == stem_mul(weyl(A), weyl(B)))) fail(rep.weyl_multiplicative, "Weyl not multiplicative: " + name);
        }
        for (auto& c : levels) {
          StemElement C3 = StemElement::basis(c);
          if (!(stem_mul(ab, C3) == stem_mul(A, stem_mul(B, C3))))
            fail(rep.associative, "not associative: " + name + " * " + to_text(c));
        }
      }
  }
  for (auto& a : bottom) {
    StemElement inv = StemElement::basis({C::Us, -a.j});
    if (!(stem_mul(StemElement::basis(a), inv) == StemElement::basis({C::Us, 0})))
      fail(rep.laurent, "no inverse for " + to_text(a));
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9), pick_top(0, int(top.size()) - 1), pick_j(-2 * max_j, 2 * max_j);
  for (int t = 0; t < frobenius_pairs; ++t) {
    C bc = top[pick_top(rng)];
    StemElement b(StemLevel::Top);
    for (auto& c : stem_group(bc.bidegree().k, bc.bidegree().n).top)
      b += StemElement::basis(c, Rational(coeff(rng), 1 + (rng() % 3)));
    StemElement a = StemElement::basis({C::Us, pick_j(rng)}, coeff(rng));
    StemElement lhs = tr(stem_mul(res(b), a)), rhs = stem_mul(b, tr(a));
    ++rep.frobenius_pairs;
    if (!(lhs == rhs)) fail(rep.frobenius, "Frobenius fails for b = " + to_text(b) + ", a = " + to_text(a));
  }
  return rep;
}

namespace {

// A[w,u]/(u^2 = u, xu) tensor the top-level stems; key (w-power, u).
using ShuKey = std::pair<int, bool>;
using ShuElement = std::map<ShuKey, StemElement>;

void shu_add(ShuElement& out, const ShuKey& k, const StemElement& v) {
  StemElement t = v;
  if (k.second) t = stem_mul(t, StemElement::y());
  if (t.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, t);
  } else {
    it->second += t;
    if (it->second.is_zero()) out.erase(it);
  }
}

ShuElement shu(std::initializer_list<std::tuple<int, bool, StemElement>> terms) {
  ShuElement e;
  for (auto& [a, u, v] : terms) shu_add(e, {a, u}, v);
  return e;
}

ShuElement operator*(const ShuElement& p, const ShuElement& q) {
  ShuElement out;
  for (auto& [kp, vp] : p)
    for (auto& [kq, vq] : q) shu_add(out, {kp.first + kq.first, kp.second || kq.second}, stem_mul(vp, vq));
  return out;
}

ShuElement operator+(const ShuElement& p, const ShuElement& q) {
  ShuElement out = p;
  for (auto& [k, v] : q) shu_add(out, k, v);
  return out;
}

ShuElement scale(const ShuElement& p, const Rational& c) {
  ShuElement out;
  for (auto& [k, v] : p) shu_add(out, k, v * c);
  return out;
}

// Coordinates keyed by (equation, key, class).
struct ShuIndex {
  std::map<std::tuple<int, ShuKey, StemClass>, long> ids;
  SparseVector vec(const ShuElement& e, int eq) {
    SparseVector v;
    for (auto& [k, s] : e)
      for (auto& [c, q] : s.terms()) {
        auto key = std::make_tuple(eq, k, c);
        auto it = ids.try_emplace(key, long(ids.size())).first;
        v[it->second] += q;
      }
    return v;
  }
};

std::string shu_text(const std::vector<Rational>& beta) {
  std::string out;
  const char* names[] = {"w^2*u_2s", "w*a_s^2"};
  for (int k = 0; k < 2; ++k) {
    if (sgn(beta[k]) == 0) continue;
    Rational a = abs(beta[k]);
    std::string body = a == 1 ? names[k] : a.get_str() + " " + names[k];
    if (out.empty()) out = sgn(beta[k]) < 0 ? "-" + body : body;
    else out += (sgn(beta[k]) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ComparisonReport shu_comparison() {
  StemElement one = StemElement::basis({C::One});
  StemElement u2s = StemElement::basis({C::U2s, 1}), a2 = StemElement::basis({C::As, 2});
  StemElement x_over_2u2s = StemElement::basis({C::XU2s, 1}, Rational(1, 2));
  StemElement y_over_a2 = StemElement::basis({C::YAs, 2});
  ShuElement w = shu({{1, false, one}}), u = shu({{0, true, one}});
  ShuElement c = shu({{1, false, u2s}, {0, true, a2}});
  ShuElement A2 = shu({{0, false, a2}}), U2 = shu({{0, false, u2s}});
  ShuElement X2U = shu({{0, false, x_over_2u2s}}), YA2 = shu({{0, false, y_over_a2}});
  std::vector<ShuElement> cand = {shu({{2, false, u2s}}), shu({{1, false, a2}})};

  // Equation 0: u_2s b = c^2 - a^2 c.  Equation 1: b y/a^2 = w - c x/(2 u_2s).
  ShuIndex idx;
  ShuElement rhs0 = c * c + scale(A2 * c, -1);
  ShuElement rhs1 = w + scale(c * X2U, -1);
  std::vector<SparseVector> cols;
  for (auto& b : cand) {
    SparseVector v = idx.vec(U2 * b, 0);
    for (auto& [k, q] : idx.vec(b * YA2, 1)) v[k] += q;
    cols.push_back(v);
  }
  SparseVector target = idx.vec(rhs0, 0);
  for (auto& [k, q] : idx.vec(rhs1, 1)) target[k] += q;

  ComparisonReport rep;
  rep.solution = solve_combination(cols, target);
  RowReducer rr;
  for (auto& v : cols) rr.add(v);
  rep.unique = rep.solution && rr.rank() == cols.size();
  if (rep.solution) rep.solved_b = shu_text(*rep.solution);
  rep.u_identity = c * YA2 == u;
  ShuElement negated_b = scale(cand[0], -1) + cand[1];
  rep.negated_b_satisfies_relation = U2 * negated_b == rhs0;
  rep.negated_b_satisfies_w_identity = negated_b * YA2 == rhs1;
  return rep;
}

}  // namespace equichar
