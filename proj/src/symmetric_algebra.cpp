#include "equichar/symmetric_algebra.hpp"

#include "equichar/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace equichar {

Symbol Symbol::gamma(int s, int i, int side) {
  if (s < 0 || i < 0 || (s == 0 && i == 0)) throw MathError("gamma_{0,0} is not a generator symbol");
  Symbol g;
  g.side = uint8_t(side);
  g.s = uint8_t(s);
  g.i = uint8_t(i);
  g.cat = (s == 0 && i == 1) ? U : (i == 0 ? E : Gamma);
  return g;
}

Symbol Symbol::chi(int side) {
  Symbol g;
  g.side = uint8_t(side);
  g.cat = Chi;
  return g;
}

Symbol Symbol::delta(int side) {
  Symbol g;
  g.side = uint8_t(side);
  g.cat = Delta;
  return g;
}

std::string to_text(const Symbol& g, Letters letters) {
  auto pair = [&](const char* stem) {
    return std::string(stem) + "_{" + std::to_string(g.s) + "," + std::to_string(g.i) + "}";
  };
  switch (g.cat) {
    case Symbol::U: return "u";
    case Symbol::Delta: return "delta";
    case Symbol::Chi: return "chi";
    case Symbol::E: {
      const char* stem = letters == Letters::Sp ? "k" : letters == Letters::SO ? "p" : "e";
      return stem + std::to_string(g.s);
    }
    default:
      if (g.s == 0) return pair("g");
      return pair(letters == Letters::Sp ? "kappa" : letters == Letters::SO ? "pi" : "g");
  }
}

GenMonomial operator*(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::string to_text(const GenMonomial& m, const std::vector<Letters>& sides) {
  std::vector<std::string> parts(std::max<std::size_t>(sides.size(), 1));
  for (std::size_t k = 0; k < m.size();) {
    std::size_t e = k;
    while (e < m.size() && m[e] == m[k]) ++e;
    std::size_t side = m[k].side;
    if (side >= parts.size()) throw MathError("symbol side out of range");
    std::string f = to_text(m[k], sides.empty() ? Letters::U : sides[side]);
    if (e - k > 1) f += "^" + std::to_string(e - k);
    if (!parts[side].empty()) parts[side] += "*";
    parts[side] += f;
    k = e;
  }
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += "(x)";
    s += parts[k].empty() ? "1" : parts[k];
  }
  return s;
}

bool GenOrder::operator()(const GenMonomial& a, const GenMonomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

bool killed(const GenMonomial& m) {
  return std::any_of(m.begin(), m.end(), [](const Symbol& g) { return g.x_killed(); });
}

}  // namespace

GeneratorPolynomial GeneratorPolynomial::constant(Ring ring, const Burnside& c) {
  GeneratorPolynomial p(ring);
  p.add_term({}, c);
  return p;
}

GeneratorPolynomial GeneratorPolynomial::monomial(Ring ring, const GenMonomial& m, const Burnside& c) {
  GeneratorPolynomial p(ring);
  p.add_term(m, c);
  return p;
}

Burnside GeneratorPolynomial::coeff(const GenMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Burnside() : it->second;
}

void GeneratorPolynomial::add_term(const GenMonomial& m, const Burnside& c) {
  Burnside v = c;
  if (ring_ == Ring::Q && v.has_x()) throw MathError("x coefficient in a Q-polynomial");
  if (ring_ == Ring::A && v.has_x() && killed(m)) v.qx = 0;
  if (v.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GeneratorPolynomial GeneratorPolynomial::promote() const {
  GeneratorPolynomial p = *this;
  p.ring_ = Ring::A;
  return p;
}

GeneratorPolynomial& GeneratorPolynomial::operator+=(const GeneratorPolynomial& o) {
  if (ring_ != o.ring_) throw MathError("coefficient-ring mismatch");
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GeneratorPolynomial& GeneratorPolynomial::operator-=(const GeneratorPolynomial& o) {
  if (ring_ != o.ring_) throw MathError("coefficient-ring mismatch");
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GeneratorPolynomial GeneratorPolynomial::operator-() const {
  GeneratorPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

GeneratorPolynomial operator*(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
  if (a.ring_ != b.ring_) throw MathError("coefficient-ring mismatch");
  GeneratorPolynomial r(a.ring_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

GeneratorPolynomial operator*(const Burnside& c, const GeneratorPolynomial& a) {
  GeneratorPolynomial r(a.ring_);
  for (auto& [m, v] : a.terms_) r.add_term(m, c * v);
  return r;
}

std::string coeff_text(const Burnside& c) {
  if (!c.has_x()) return to_string(c.q);
  if (sgn(c.q) == 0) return c.qx == 1 ? "x" : to_string(c.qx) + " x";
  if (c.qx == -c.q / 2) return c.q == 1 ? "y" : to_string(c.q) + " y";
  return c.str();
}

namespace {

void append_term(std::string& out, const Burnside& c, const GenMonomial& m, const std::vector<Letters>& sides) {
  Burnside v = c;
  bool negative = sgn(v.q) < 0 || (sgn(v.q) == 0 && sgn(v.qx) < 0);
  if (negative) v = -v;
  std::string coef = coeff_text(v);
  std::string body;
  if (m.empty()) body = coef;
  else if (coef == "1") body = to_text(m, sides);
  else body = coef + " " + to_text(m, sides);
  if (out.empty()) out = (negative ? "-" : "") + body;
  else out += (negative ? " - " : " + ") + body;
}

}  // namespace

std::string to_text(const GeneratorPolynomial& p, const std::vector<Letters>& sides) {
  std::string s;
  for (auto& [m, c] : p.terms()) append_term(s, c, m, sides);
  return s.empty() ? "0" : s;
}

GeneratorPolynomial compose(const GeneratorPolynomial& p, const std::map<Symbol, GeneratorPolynomial>& images,
                            Ring target_ring) {
  GeneratorPolynomial r(target_ring);
  for (auto& [m, c] : p.terms()) {
    GeneratorPolynomial t = GeneratorPolynomial::constant(target_ring, c);
    for (auto& g : m) {
      auto it = images.find(g);
      if (it == images.end()) throw MathError("no image for generator " + to_text(g));
      GeneratorPolynomial img = it->second;
      if (img.ring() != target_ring) img = img.promote();
      t = t * img;
    }
    r += t;
  }
  return r;
}

TorusModel::TorusModel(std::vector<Block> blocks, Ring ring) : blocks_(std::move(blocks)), ring_(ring) {
  int off = 0;
  for (auto& b : blocks_) {
    if (b.n < 0) throw MathError("negative block rank");
    b.offset = off;
    off += b.width();
  }
  if (off > kMaxVars) throw MathError("torus model needs more than " + std::to_string(kMaxVars) + " variable pairs");
  nvars_ = off;
}

TorusModel TorusModel::unitary(int n, Ring ring) {
  return TorusModel({Block{n}}, ring);
}

TorusPolynomial gamma_expand(int s, int i, int n, Ring ring) {
  if (s < 0 || i < 0 || s + i > n) throw MathError("gamma_{" + std::to_string(s) + "," + std::to_string(i) +
                                                   "} needs s + i <= n = " + std::to_string(n));
  TorusPolynomial p(n, ring);
  unsigned full = (1u << n) - 1;
  for (unsigned mw = 0; mw <= full; ++mw) {
    if (__builtin_popcount(mw) != s) continue;
    unsigned rest = full & ~mw;
    for (unsigned mu = rest;; mu = (mu - 1) & rest) {
      if (__builtin_popcount(mu) == i) {
        Monomial m;
        for (int k = 0; k < n; ++k) {
          if (mw >> k & 1) m.a[k] = 1;
          if (mu >> k & 1) m.set_u(k, true);
        }
        p.add_term(m, Burnside(1));
      }
      if (mu == 0) break;
    }
  }
  return p;
}

TorusPolynomial TorusModel::expand(const Symbol& g) const {
  if (g.side >= blocks_.size()) throw MathError("symbol side out of range");
  const Block& b = blocks_[g.side];
  TorusPolynomial r(nvars_, ring_);
  if (g.cat == Symbol::Delta) {
    if (!b.delta) throw MathError("delta in a block without a delta slot");
    Monomial m;
    m.set_u(b.offset + b.n, true);
    r.add_term(m, Burnside(1));
    return r;
  }
  if (g.cat == Symbol::Chi) {
    if (b.kind != BlockKind::Even) throw MathError("chi outside an even orthogonal block");
    Monomial m;
    for (int k = 0; k < b.n; ++k) m.a[b.offset + k] = 1;
    r.add_term(m, Burnside(1));
    return r;
  }
  int power = b.kind == BlockKind::Plain ? 1 : 2;
  TorusPolynomial local = gamma_expand(g.s, g.i, b.n);
  for (auto& [lm, c] : local.terms()) {
    Monomial m;
    for (int k = 0; k < b.n; ++k) {
      m.a[b.offset + k] = uint8_t(lm.a[k] * power);
      m.set_u(b.offset + k, lm.u(k));
    }
    r.add_term(m, c);
  }
  return r;
}

TorusPolynomial TorusModel::expand(const GenMonomial& m) const {
  TorusPolynomial r = TorusPolynomial::constant(nvars_, ring_, Burnside(1));
  for (auto& g : m) r = r * expand(g);
  return r;
}

TorusPolynomial TorusModel::expand(const GeneratorPolynomial& p) const {
  TorusPolynomial r(nvars_, ring_);
  std::map<Symbol, TorusPolynomial> cache;
  for (auto& [m, c] : p.terms()) {
    TorusPolynomial t = TorusPolynomial::constant(nvars_, ring_, c);
    for (auto& g : m) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, expand(g)).first;
      t = t * it->second;
    }
    r += t;
  }
  return r;
}

bool is_orbit_max(const Monomial& M, int n) {
  for (int l = 1; l < n; ++l) {
    if (M.a[l] > M.a[l - 1]) return false;
    if (M.a[l] == M.a[l - 1] && M.u(l) && !M.u(l - 1)) return false;
  }
  return true;
}

namespace {

using QMap = std::map<GenMonomial, Rational>;

// Expansions of side-0 monomials in n plain variable pairs, memoized per call.
class PlainExpander {
public:
  explicit PlainExpander(int n) : n_(n) {}

  const TorusPolynomial& symbol(const Symbol& g) {
    auto it = sym_.find(g);
    if (it == sym_.end()) it = sym_.emplace(g, gamma_expand(g.s, g.i, n_)).first;
    return it->second;
  }

  const TorusPolynomial& operator()(const GenMonomial& m) {
    auto it = mono_.find(m);
    if (it != mono_.end()) return it->second;
    TorusPolynomial r = TorusPolynomial::constant(n_, Ring::Q, Burnside(1));
    if (!m.empty()) {
      GenMonomial head(m.begin(), m.end() - 1);
      r = (*this)(head) * symbol(m.back());
    }
    return mono_.emplace(m, std::move(r)).first->second;
  }

private:
  int n_;
  std::map<Symbol, TorusPolynomial> sym_;
  std::map<GenMonomial, TorusPolynomial> mono_;
};

std::vector<BasisElement> basis_impl(int n, int d);

std::optional<Factorization> search_factor(const Monomial& M, int n, PlainExpander& ex) {
  std::optional<Factorization> hit;
  for (auto& b : basis_impl(n, M.degree())) {
    GenMonomial f = b.monomial();
    const TorusPolynomial& e = ex(f);
    if (e.is_zero() || dominant_term(e) != M) continue;
    if (hit) throw MathError("two admissible products share the dominant term " + to_text(M, n));
    hit = Factorization{f, e.coeff(M).q};
  }
  return hit;
}

Factorization factor_impl(const Monomial& M, int n, PlainExpander& ex) {
  if (!is_orbit_max(M, n)) throw MathError("monomial " + to_text(M, n) + " is not greatest in its orbit");
  std::vector<std::pair<int, int>> runs;  // (start, length), 0-based
  for (int l = 0; l < n;) {
    if (!M.u(l)) {
      ++l;
      continue;
    }
    int p = l;
    while (l < n && M.u(l)) ++l;
    runs.push_back({p, l - p});
  }
  std::vector<int> k(n + 1, 0);
  bool direct = true;
  for (int l = 0; l < n; ++l) {
    int covered = 0;
    for (auto& [p, len] : runs)
      if (p > l) ++covered;
    k[l] = int(M.a[l]) - covered;
    if (k[l] < 0 || (l > 0 && k[l] > k[l - 1])) direct = false;
  }
  if (direct) {
    GenMonomial f;
    for (int l = 1; l <= n; ++l)
      for (int r = 0; r < k[l - 1] - k[l]; ++r) f.push_back(Symbol::gamma(l, 0));
    for (auto& [p, len] : runs) f.push_back(Symbol::gamma(p, len));
    std::sort(f.begin(), f.end());
    const TorusPolynomial& e = ex(f);
    if (!e.is_zero() && dominant_term(e) == M) return {f, e.coeff(M).q};
  }
  auto hit = search_factor(M, n, ex);
  if (!hit) throw MathError("no admissible product has dominant term " + to_text(M, n));
  return *hit;
}

QMap decompose_plain(const TorusPolynomial& p, int n) {
  if (n >= 2 && !is_invariant(p, GroupAction(GroupKind::SigmaN, n)))
    throw MathError("input is not Sigma_" + std::to_string(n) + "-invariant");
  QMap out;
  PlainExpander ex(n);
  for (auto& [deg, part] : p.homogeneous_parts()) {
    TorusPolynomial q = part;
    std::size_t guard = 0;
    while (!q.is_zero()) {
      if (++guard > 1000000) throw MathError("decomposition did not terminate");
      Monomial M = q.terms().begin()->first;
      Factorization f = factor_impl(M, n, ex);
      Rational k = q.coeff(M).q / f.coeff;
      out[f.factors] += k;
      q -= ex(f.factors) * Burnside(k);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (sgn(it->second) == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

TorusPolynomial halve(const TorusPolynomial& p, int n) {
  TorusPolynomial r(n, Ring::Q);
  for (auto& [m, c] : p.terms()) {
    Monomial h = m;
    for (int k = 0; k < n; ++k) {
      if (m.a[k] % 2) throw MathError("input is not invariant under sign changes");
      h.a[k] = uint8_t(m.a[k] / 2);
    }
    r.add_term(h, c);
  }
  return r;
}

void relabel_into(QMap& out, const QMap& in, int side, const GenMonomial& extra) {
  for (auto& [m, c] : in) {
    GenMonomial g = m;
    for (auto& s : g) s.side = uint8_t(side);
    g = g * extra;
    out[g] += c;
  }
}

QMap decompose_core(const TorusPolynomial& p, const Block& b, int side) {
  int n = b.n;
  QMap out;
  if (n == 0) {
    for (auto& [m, c] : p.terms()) out[{}] += c.q;
    return out;
  }
  switch (b.kind) {
    case BlockKind::Plain:
      relabel_into(out, decompose_plain(p, n), side, {});
      break;
    case BlockKind::Squared:
      if (!is_invariant(p, GroupAction(GroupKind::HyperoctahedralWreath, n)))
        throw MathError("input is not invariant under the signed permutation group");
      relabel_into(out, decompose_plain(halve(p, n), n), side, {});
      break;
    case BlockKind::Even: {
      if (!is_invariant(p, GroupAction(GroupKind::EvenSignSubgroup, n)))
        throw MathError("input is not invariant under the even signed permutation group");
      TorusPolynomial even(n, Ring::Q), odd(n, Ring::Q);
      for (auto& [m, c] : p.terms()) {
        int odd_count = 0;
        for (int k = 0; k < n; ++k) odd_count += m.a[k] % 2;
        if (odd_count == 0) {
          even.add_term(m, c);
        } else if (odd_count == n) {
          Monomial h = m;
          for (int k = 0; k < n; ++k) h.a[k] = uint8_t(h.a[k] - 1);
          odd.add_term(h, c);
        } else {
          throw MathError("input is not invariant under the even signed permutation group");
        }
      }
      QMap raw;
      relabel_into(raw, decompose_plain(halve(even, n), n), side, {});
      relabel_into(raw, decompose_plain(halve(odd, n), n), side, {Symbol::chi(side)});
      // p_n = chi^2
      Symbol top = Symbol::gamma(n, 0, side);
      for (auto& [m, c] : raw) {
        GenMonomial g;
        for (auto& s : m) {
          if (s == top) {
            g.push_back(Symbol::chi(side));
            g.push_back(Symbol::chi(side));
          } else {
            g.push_back(s);
          }
        }
        std::sort(g.begin(), g.end());
        out[g] += c;
      }
      break;
    }
  }
  return out;
}

QMap decompose_block(const TorusPolynomial& p, const Block& b, int side) {
  if (!b.delta) return decompose_core(p, b, side);
  TorusPolynomial p0(b.n, Ring::Q), p1(b.n, Ring::Q);
  for (auto& [m, c] : p.terms()) {
    Monomial h = m;
    h.set_u(b.n, false);
    (m.u(b.n) ? p1 : p0).add_term(h, c);
  }
  QMap out = decompose_core(p0, b, side);
  QMap with = decompose_core(p1, b, side);
  for (auto& [m, c] : with) out[m * GenMonomial{Symbol::delta(side)}] += c;
  return out;
}

QMap decompose_q(const TorusPolynomial& p, const TorusModel& model, std::size_t idx) {
  QMap out;
  if (idx == model.blocks().size()) {
    for (auto& [m, c] : p.terms()) {
      if (m != Monomial{}) throw MathError("polynomial uses variables outside the torus model");
      out[{}] += c.q;
    }
    return out;
  }
  const Block& b = model.blocks()[idx];
  std::map<Monomial, TorusPolynomial> groups;
  for (auto& [m, c] : p.terms()) {
    Monomial rest = m, local;
    for (int k = 0; k < b.width(); ++k) {
      local.a[k] = m.a[b.offset + k];
      local.set_u(k, m.u(b.offset + k));
      rest.a[b.offset + k] = 0;
      rest.set_u(b.offset + k, false);
    }
    auto it = groups.try_emplace(rest, b.width(), Ring::Q).first;
    it->second.add_term(local, c);
  }
  std::map<GenMonomial, TorusPolynomial> collected;
  for (auto& [rest, local] : groups) {
    for (auto& [g, c] : decompose_block(local, b, int(idx))) {
      auto it = collected.try_emplace(g, p.n(), Ring::Q).first;
      it->second.add_term(rest, Burnside(c));
    }
  }
  for (auto& [g, q] : collected)
    for (auto& [h, c] : decompose_q(q, model, idx + 1)) out[g * h] += c;
  for (auto it = out.begin(); it != out.end();) {
    if (sgn(it->second) == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

}  // namespace

Factorization factor_for_dominant(const Monomial& M, int n) {
  PlainExpander ex(n);
  return factor_impl(M, n, ex);
}

GeneratorPolynomial decompose(const TorusPolynomial& p, const TorusModel& model) {
  if (p.n() != model.nvars()) throw MathError("variable-count mismatch with the torus model");
  if (p.ring() == Ring::Q) {
    GeneratorPolynomial r(Ring::Q);
    for (auto& [m, c] : decompose_q(p, model, 0)) r.add_term(m, Burnside(c));
    return r;
  }
  QMap xs = decompose_q(p.x_side(), model, 0);
  QMap ys = decompose_q(p.y_side(), model, 0);
  GeneratorPolynomial r(Ring::A);
  for (auto& [m, c] : ys) {
    if (killed(m)) r.add_term(m, Burnside(c));
  }
  std::map<GenMonomial, std::pair<Rational, Rational>> free;
  for (auto& [m, c] : xs) {
    if (killed(m)) throw MathError("x-side decomposition produced an x-killed generator");
    free[m].first = c;
  }
  for (auto& [m, c] : ys)
    if (!killed(m)) free[m].second = c;
  for (auto& [m, sides] : free) r.add_term(m, Burnside::from_sides(sides.first, sides.second));
  return r;
}

GeneratorPolynomial decompose(const TorusPolynomial& p, int n) {
  return decompose(p, TorusModel::unitary(n, p.ring()));
}

bool is_admissible(const GenMonomial& m) {
  std::vector<std::pair<int, int>> flags;
  for (auto& g : m)
    if (g.is_gamma() && g.i > 0) flags.push_back({g.s, g.i});
  std::sort(flags.begin(), flags.end());
  for (std::size_t a = 0; a + 1 < flags.size(); ++a)
    if (flags[a].first + flags[a].second >= flags[a + 1].first) return false;
  return true;
}

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

bool in_relation_window(int s, int i, int t, int j, int n) {
  return 0 <= s && s <= t && t <= s + i && 0 < i && i <= n - s && 0 < j && j <= n - t;
}

GenMonomial RelationEntry::lhs() const {
  return GenMonomial{Symbol::gamma(s, i)} * GenMonomial{Symbol::gamma(t, j)};
}

GeneratorPolynomial RelationEntry::rhs() const {
  GeneratorPolynomial r = tail;
  r.add_term(leading_product, Burnside(leading_coeff));
  return r;
}

RelationEntry relation(int s, int i, int t, int j, int n, const RelationCache* cache) {
  if (!in_relation_window(s, i, t, j, n))
    throw MathError("indices (s,i,t,j,n) = (" + std::to_string(s) + "," + std::to_string(i) + "," +
                    std::to_string(t) + "," + std::to_string(j) + "," + std::to_string(n) +
                    ") are outside the relation window");
  RelationEntry r;
  r.s = s;
  r.i = i;
  r.t = t;
  r.j = j;
  r.n = n;
  if (t > 0) r.leading_product.push_back(Symbol::gamma(t, 0));
  r.leading_product = r.leading_product * GenMonomial{Symbol::gamma(s, std::min(i + j, n - s))};
  r.expected_coeff = binomial(std::min(i + j + s, n) - t, j);
  r.overlap_coeff = r.expected_coeff * binomial(j, i + j - std::min(i + j, n - s));
  std::optional<GeneratorPolynomial> full;
  if (cache) full = cache->load(s, i, t, j, n);
  if (!full) {
    full = decompose(gamma_expand(s, i, n) * gamma_expand(t, j, n), n);
    if (cache) cache->store(s, i, t, j, n, *full);
  }
  r.leading_coeff = full->coeff(r.leading_product).q;
  r.tail = *full;
  r.tail.add_term(r.leading_product, Burnside(-r.leading_coeff));
  return r;
}

std::vector<RelationEntry> relation_set(int n, int threads, const RelationCache* cache) {
  if (n < 1) throw MathError("relation_set needs n >= 1");
  std::vector<std::array<int, 4>> quads;
  for (int s = 0; s <= n; ++s)
    for (int t = s; t <= n; ++t)
      for (int i = 1; i <= n - s; ++i)
        for (int j = 1; j <= n - t; ++j)
          if (in_relation_window(s, i, t, j, n)) quads.push_back({s, i, t, j});
  std::vector<RelationEntry> out(quads.size());
  auto work = [&](std::size_t k) { out[k] = relation(quads[k][0], quads[k][1], quads[k][2], quads[k][3], n, cache); };
  if (threads <= 1 || quads.size() < 2) {
    for (std::size_t k = 0; k < quads.size(); ++k) work(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(quads.size());
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < quads.size();) {
        try {
          work(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string to_text(const RelationEntry& r, Letters letters) {
  std::vector<Letters> sides{letters};
  GeneratorPolynomial lead(Ring::Q);
  lead.add_term(r.leading_product, Burnside(r.leading_coeff));
  std::string rhs = to_text(lead, sides);
  std::string tail = to_text(r.tail, sides);
  if (lead.is_zero()) rhs = tail;
  else if (!r.tail.is_zero()) rhs += (tail[0] == '-' ? " - " + tail.substr(1) : " + " + tail);
  return to_text(r.lhs(), sides) + " = " + rhs;
}

RelationCheck check_relation(const RelationEntry& r) {
  RelationCheck c;
  TorusModel model = TorusModel::unitary(r.n, Ring::Q);
  TorusPolynomial lhs = model.expand(r.lhs());
  c.identity = lhs == model.expand(r.rhs());
  c.integral = is_integer(r.leading_coeff);
  for (auto& [m, v] : r.tail.terms())
    if (!is_integer(v.q) || v.has_x()) c.integral = false;
  c.tail_smaller = true;
  Monomial lead = dominant_term(model.expand(r.leading_product));
  for (auto& [m, v] : r.tail.terms())
    if (!(dominant_term(model.expand(m)) < lead)) c.tail_smaller = false;
  c.leading_law = r.leading_coeff == r.expected_coeff;
  c.overlap_law = r.leading_coeff == r.overlap_coeff;
  return c;
}

namespace {

GeneratorPolynomial u_binomial(int k, Ring ring) {
  GeneratorPolynomial u = GeneratorPolynomial::monomial(ring, {Symbol::gamma(0, 1)});
  GeneratorPolynomial r = GeneratorPolynomial::constant(ring, Burnside(1));
  Rational fact = 1;
  for (int l = 0; l < k; ++l) {
    r = r * (u - GeneratorPolynomial::constant(ring, Burnside(l)));
    fact *= l + 1;
  }
  return Burnside(Rational(1) / fact) * r;
}

}  // namespace

GeneratorPolynomial substitute_u_binomials(const GeneratorPolynomial& p, int n) {
  std::map<Symbol, GeneratorPolynomial> images;
  for (auto& [m, c] : p.terms())
    for (auto& g : m) {
      if (g.is_gamma() && g.s == 0 && g.i >= 2) images.emplace(g, u_binomial(g.i, p.ring()));
      else images.emplace(g, GeneratorPolynomial::monomial(p.ring(), {g}));
    }
  (void)n;
  return compose(p, images, p.ring());
}

std::vector<Rational> type_one_coefficients(int n) {
  GeneratorPolynomial d = decompose(gamma_expand(0, 1, n).pow(n + 1), n);
  GeneratorPolynomial poly = substitute_u_binomials(d, n);
  std::vector<Rational> r(n);
  Symbol u = Symbol::gamma(0, 1);
  for (auto& [m, c] : poly.terms()) {
    for (auto& g : m)
      if (g != u) throw MathError("type I reduction left a non-u generator");
    int deg = int(m.size());
    if (deg < 1 || deg > n) throw MathError("type I reduction produced u^" + std::to_string(deg));
    r[deg - 1] = c.q;
  }
  return r;
}

GenMonomial BasisElement::monomial() const {
  GenMonomial m;
  for (std::size_t l = 0; l < e_exponents.size(); ++l)
    for (int r = 0; r < e_exponents[l]; ++r) m.push_back(Symbol::gamma(int(l) + 1, 0));
  for (auto& [s, i] : flags) m.push_back(Symbol::gamma(s, i));
  std::sort(m.begin(), m.end());
  return m;
}

namespace {

void e_vectors(int n, int d, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (l > n) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int r = d / l; r >= 0; --r) {
    cur[l - 1] = r;
    e_vectors(n, d - r * l, l + 1, cur, out);
  }
  cur[l - 1] = 0;
}

std::vector<std::vector<int>> e_exponent_vectors(int n, int d) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(n, 0);
  e_vectors(n, d, 1, cur, out);
  return out;
}

void flag_sets(int n, int smin, int budget, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back(cur);
  for (int s = smin; s <= budget && s < n; ++s)
    for (int i = 1; s + i <= n; ++i) {
      cur.push_back({s, i});
      flag_sets(n, s + i + 1, budget - s, cur, out);
      cur.pop_back();
    }
}

std::vector<BasisElement> basis_impl(int n, int d) {
  std::vector<BasisElement> out;
  if (d < 0) return out;
  std::vector<std::vector<std::pair<int, int>>> sets;
  std::vector<std::pair<int, int>> cur;
  flag_sets(n, 0, d, cur, sets);
  for (auto& f : sets) {
    int used = 0;
    for (auto& [s, i] : f) used += s;
    if (used > d) continue;
    for (auto& e : e_exponent_vectors(n, d - used)) out.push_back({e, f});
  }
  return out;
}

}  // namespace

std::vector<BasisElement> basis(int n, int d) {
  if (n < 1) throw MathError("basis needs n >= 1");
  return basis_impl(n, d);
}

std::vector<GenMonomial> corollary_basis(int n, int d) {
  std::vector<GenMonomial> out;
  for (auto& b : basis_impl(n, d)) {
    bool has_u_flag = false;
    int smin = n + 1;
    for (auto& [s, i] : b.flags) {
      if (s == 0) has_u_flag = true;
      else smin = std::min(smin, s);
    }
    if (has_u_flag) continue;
    GenMonomial base = b.monomial();
    for (int a = 0; a <= n && a < smin; ++a) {
      GenMonomial m = base;
      for (int r = 0; r < a; ++r) m.push_back(Symbol::gamma(0, 1));
      std::sort(m.begin(), m.end());
      out.push_back(m);
    }
  }
  return out;
}

unsigned long partition_p(int n, int m) {
  if (m < 0) return 0;
  if (n <= 0) return m == 0 ? 1 : 0;
  std::vector<std::vector<unsigned long>> t(n + 1, std::vector<unsigned long>(m + 1, 0));
  t[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 0; b <= m; ++b) t[a][b] = t[a - 1][b] + (b >= a ? t[a][b - a] : 0);
  return t[n][m];
}

unsigned long dim_u(int n, int m) {
  unsigned long total = partition_p(n, m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) total += partition_p(i, j) * partition_p(n - i, m - j);
  return total;
}

unsigned long weighted_basis_count(int n, int d) {
  return basis(n, d).size() + partition_p(n, d);
}

bool MinimalityReport::ok() const {
  bool all = std::all_of(independent.begin(), independent.end(), [](auto& p) { return p.second; });
  return all && u_independent && cardinality == std::size_t(1 + n + n * (n - 1) / 2);
}

namespace {

void products_of_degree(const std::vector<Symbol>& gens, std::size_t from, int d, GenMonomial& cur,
                        std::vector<GenMonomial>& out) {
  if (d == 0) {
    GenMonomial m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(m);
    return;
  }
  for (std::size_t k = from; k < gens.size(); ++k) {
    if (gens[k].s > d) continue;
    cur.push_back(gens[k]);
    products_of_degree(gens, k, d - gens[k].s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MinimalityReport minimality_certificate(int n) {
  if (n < 1 || n > 3) throw MathError("minimality certificate is limited to 1 <= n <= 3");
  MinimalityReport rep;
  rep.n = n;
  std::vector<Symbol> positive;
  for (int s = 1; s <= n; ++s) positive.push_back(Symbol::gamma(s, 0));
  for (int s = 1; s < n; ++s)
    for (int j = 1; s + j <= n; ++j) positive.push_back(Symbol::gamma(s, j));
  rep.cardinality = 1 + positive.size();
  TorusModel model = TorusModel::unitary(n, Ring::Q);
  for (auto& target : positive) {
    std::vector<Symbol> others;
    for (auto& g : positive)
      if (g != target) others.push_back(g);
    std::vector<GenMonomial> prods;
    GenMonomial cur;
    products_of_degree(others, 0, target.s, cur, prods);
    MonomialIndex idx;
    RowReducer rr;
    for (auto& m : prods)
      for (int k = 0; k <= n; ++k) {
        GenMonomial f = m;
        if (k > 0) f = f * GenMonomial{Symbol::gamma(0, k)};
        rr.add(idx.vectorize(model.expand(f)));
      }
    rep.independent.push_back({target, !rr.in_span(idx.vectorize(model.expand(GenMonomial{target})))});
  }
  // Degree 0 without u: only the constants of the Burnside ring.
  MonomialIndex idx;
  RowReducer rr;
  TorusModel amodel = TorusModel::unitary(n, Ring::A);
  rr.add(idx.vectorize(TorusPolynomial::constant(n, Ring::A, Burnside(1))));
  rr.add(idx.vectorize(TorusPolynomial::constant(n, Ring::A, Burnside::x())));
  rep.u_independent = !rr.in_span(idx.vectorize(amodel.expand(GenMonomial{Symbol::gamma(0, 1)})));
  return rep;
}

}  // namespace equichar
