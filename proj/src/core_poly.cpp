#include "equichar/core_poly.hpp"

#include "equichar/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace equichar {

std::string to_string(const Rational& r) {
  return r.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0)
    throw MathError("bad rational: '" + s + "'");
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) {
  return r.get_den() == 1;
}

Burnside Burnside::from_sides(const Rational& xside, const Rational& yside) {
  return Burnside(yside, (xside - yside) / 2);
}

Burnside& Burnside::operator+=(const Burnside& o) {
  q += o.q;
  qx += o.qx;
  return *this;
}

Burnside& Burnside::operator-=(const Burnside& o) {
  q -= o.q;
  qx -= o.qx;
  return *this;
}

Burnside& Burnside::operator*=(const Burnside& o) {
  if (sgn(qx) == 0 && sgn(o.qx) == 0) {
    q *= o.q;
    return *this;
  }
  Rational nq = q * o.q;
  Rational nx = q * o.qx + qx * o.q + 2 * qx * o.qx;
  q = nq;
  qx = nx;
  return *this;
}

std::string Burnside::str() const {
  if (!has_x()) return to_string(q);
  std::string s = "(" + to_string(q);
  if (sgn(qx) < 0) s += " - " + to_string(Rational(-qx));
  else s += " + " + to_string(qx);
  return s + " x)";
}

const char* ring_name(Ring r) {
  return r == Ring::Q ? "Q" : "A_Q";
}

int Monomial::degree() const {
  int d = 0;
  for (auto v : a) d += v;
  return d;
}

int Monomial::u_count() const {
  return __builtin_popcount(eps);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int v = int(a[i]) + int(o.a[i]);
    if (v > 255) throw MathError("exponent overflow");
    r.a[i] = uint8_t(v);
  }
  r.eps = eps | o.eps;
  return r;
}

std::string to_text(const Monomial& m, int n) {
  std::string s;
  auto put = [&](const std::string& f) {
    if (!s.empty()) s += "*";
    s += f;
  };
  for (int i = 0; i < n; ++i) {
    if (m.a[i] == 0) continue;
    std::string f = "w" + std::to_string(i + 1);
    if (m.a[i] > 1) f += "^" + std::to_string(m.a[i]);
    put(f);
  }
  for (int i = 0; i < n; ++i)
    if (m.u(i)) put("u" + std::to_string(i + 1));
  return s.empty() ? "1" : s;
}

TorusPolynomial::TorusPolynomial(int n, Ring ring) : n_(n), ring_(ring) {
  if (n < 0 || n > kMaxVars) throw MathError("unsupported number of variables: " + std::to_string(n));
}

TorusPolynomial TorusPolynomial::constant(int n, Ring ring, const Burnside& c) {
  TorusPolynomial p(n, ring);
  p.add_term(Monomial{}, c);
  return p;
}

TorusPolynomial TorusPolynomial::monomial(int n, Ring ring, const Monomial& m, const Burnside& c) {
  TorusPolynomial p(n, ring);
  p.add_term(m, c);
  return p;
}

TorusPolynomial TorusPolynomial::w(int n, Ring ring, int i) {
  if (i < 0 || i >= n) throw MathError("variable index out of range");
  Monomial m;
  m.a[i] = 1;
  return monomial(n, ring, m);
}

TorusPolynomial TorusPolynomial::u(int n, Ring ring, int i) {
  if (i < 0 || i >= n) throw MathError("variable index out of range");
  Monomial m;
  m.set_u(i, true);
  return monomial(n, ring, m);
}

void TorusPolynomial::reduce_coeff(const Monomial& m, Burnside& c) const {
  if (ring_ == Ring::Q) {
    if (c.has_x()) throw MathError("x coefficient in a Q-polynomial");
  } else if (m.has_u()) {
    c.qx = 0;  // x u_i = 0
  }
}

Burnside TorusPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Burnside() : it->second;
}

void TorusPolynomial::add_term(const Monomial& m, const Burnside& c) {
  for (int i = n_; i < kMaxVars; ++i)
    if (m.a[i] != 0 || m.u(i)) throw MathError("monomial uses a variable beyond n");
  Burnside v = c;
  reduce_coeff(m, v);
  if (v.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> TorusPolynomial::homogeneous_degree() const {
  std::optional<int> d;
  for (auto& [m, c] : terms_) {
    int k = m.degree();
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d.value_or(0);
}

std::map<int, TorusPolynomial> TorusPolynomial::homogeneous_parts() const {
  std::map<int, TorusPolynomial> parts;
  for (auto& [m, c] : terms_) {
    auto it = parts.try_emplace(m.degree(), n_, ring_).first;
    it->second.terms_.emplace(m, c);
  }
  return parts;
}

bool TorusPolynomial::u_free() const {
  for (auto& [m, c] : terms_)
    if (m.has_u()) return false;
  return true;
}

TorusPolynomial TorusPolynomial::promote() const {
  TorusPolynomial p = *this;
  p.ring_ = Ring::A;
  return p;
}

TorusPolynomial TorusPolynomial::x_side() const {
  TorusPolynomial p(n_, Ring::Q);
  for (auto& [m, c] : terms_)
    if (!m.has_u()) p.add_term(m, Burnside(c.xside()));
  return p;
}

TorusPolynomial TorusPolynomial::y_side() const {
  TorusPolynomial p(n_, Ring::Q);
  for (auto& [m, c] : terms_) p.add_term(m, Burnside(c.yside()));
  return p;
}

TorusPolynomial TorusPolynomial::from_sides(const TorusPolynomial& xs, const TorusPolynomial& ys) {
  if (xs.n() != ys.n()) throw MathError("variable-count mismatch");
  if (!xs.u_free()) throw MathError("x-side component must be u-free");
  TorusPolynomial p(xs.n(), Ring::A);
  for (auto& [m, c] : ys.terms_) p.add_term(m, Burnside::from_sides(xs.coeff(m).q, c.q));
  for (auto& [m, c] : xs.terms_)
    if (!ys.terms_.count(m)) p.add_term(m, Burnside::from_sides(c.q, 0));
  return p;
}

void TorusPolynomial::check_compatible(const TorusPolynomial& o) const {
  if (n_ != o.n_) throw MathError("variable-count mismatch");
  if (ring_ != o.ring_) throw MathError("coefficient-ring mismatch");
}

TorusPolynomial& TorusPolynomial::operator+=(const TorusPolynomial& o) {
  check_compatible(o);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TorusPolynomial& TorusPolynomial::operator-=(const TorusPolynomial& o) {
  check_compatible(o);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TorusPolynomial& TorusPolynomial::operator*=(const Burnside& c) {
  if (ring_ == Ring::Q && c.has_x()) throw MathError("x coefficient in a Q-polynomial");
  Terms out;
  for (auto& [m, v] : terms_) {
    Burnside r = v * c;
    reduce_coeff(m, r);
    if (!r.is_zero()) out.emplace(m, r);
  }
  terms_ = std::move(out);
  return *this;
}

TorusPolynomial TorusPolynomial::operator-() const {
  TorusPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

TorusPolynomial operator*(const TorusPolynomial& a, const TorusPolynomial& b) {
  a.check_compatible(b);
  TorusPolynomial r(a.n_, a.ring_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const TorusPolynomial& a, const TorusPolynomial& b) {
  return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

TorusPolynomial TorusPolynomial::pow(int k) const {
  TorusPolynomial r = constant(n_, ring_, Burnside(1));
  TorusPolynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Monomial dominant_term(const TorusPolynomial& p) {
  if (p.is_zero()) throw MathError("dominant term of zero");
  if (!p.homogeneous_degree()) {
    auto parts = p.homogeneous_parts();
    throw MathError("dominant term of a non-homogeneous polynomial (degrees " +
                    std::to_string(parts.begin()->first) + " and " +
                    std::to_string(std::next(parts.begin())->first) + ")");
  }
  return p.terms().begin()->first;
}

std::string to_text(const TorusPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    std::string mono = to_text(m, p.n());
    bool is_one = mono == "1";
    std::string body;
    bool negative = false;
    if (c.has_x()) {
      body = c.str();
      if (!is_one) body += "*" + mono;
    } else {
      Rational v = c.q;
      if (sgn(v) < 0) {
        negative = true;
        v = -v;
      }
      if (is_one) body = to_string(v);
      else if (v == 1) body = mono;
      else body = to_string(v) + "*" + mono;
    }
    if (first) s = (negative ? "-" : "") + body;
    else s += (negative ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

namespace {

class TorusParser {
public:
  TorusParser(const std::string& t, int n, Ring ring) : t_(t), n_(n), ring_(ring) {}

  TorusPolynomial parse() {
    TorusPolynomial p(n_, ring_);
    skip();
    if (peek() == '0' && rest_is_blank(pos_ + 1)) return p;
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= t_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      p.add_term(m, sign < 0 ? -c : c);
    }
    if (first) fail("empty polynomial");
    return p;
  }

private:
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < t_.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(t_[i]))) return false;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw MathError("parse error at column " + std::to_string(pos_ + 1) + ": " + why);
  }

  std::string number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (d == pos_) fail("missing denominator");
    }
    if (start == pos_) fail("expected a number");
    return t_.substr(start, pos_ - start);
  }

  int index() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a variable index");
    int i = std::stoi(t_.substr(start, pos_ - start));
    if (i < 1 || i > n_) fail("variable index out of range");
    return i - 1;
  }

  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return std::stoi(t_.substr(start, pos_ - start));
  }

  void need_a() const {
    if (ring_ != Ring::A) fail("Burnside coefficient in a Q-polynomial");
  }

  Burnside paren_coeff() {
    ++pos_;  // '('
    skip();
    Burnside c;
    bool first = true;
    while (true) {
      skip();
      if (peek() == ')') {
        ++pos_;
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' in coefficient");
      }
      first = false;
      Rational v = 1;
      bool have_num = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = parse_rational(number());
        have_num = true;
        skip();
      }
      if (peek() == 'x') {
        ++pos_;
        c.qx += sign * v;
      } else {
        if (!have_num) fail("expected a coefficient");
        c.q += sign * v;
      }
    }
    if (c.has_x()) need_a();
    return c;
  }

  std::pair<Monomial, Burnside> term() {
    Monomial m;
    Burnside c(1);
    while (true) {
      skip();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= Burnside(parse_rational(number()));
      } else if (ch == '(') {
        c *= paren_coeff();
      } else if (ch == 'w') {
        ++pos_;
        int i = index();
        int e = exponent();
        if (int(m.a[i]) + e > 255) fail("exponent too large");
        m.a[i] = uint8_t(m.a[i] + e);
      } else if (ch == 'u') {
        ++pos_;
        int i = index();
        if (exponent() > 0) m.set_u(i, true);
      } else if (ch == 'x') {
        need_a();
        ++pos_;
        c *= Burnside::x();
      } else if (ch == 'y') {
        need_a();
        ++pos_;
        c *= Burnside::y();
      } else {
        fail("unexpected character");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  const std::string& t_;
  int n_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusPolynomial parse_torus(const std::string& text, int n, Ring ring) {
  return TorusParser(text, n, ring).parse();
}

GroupAction::GroupAction(GroupKind kind, int n) : kind_(kind), n_(n) {
  if (n < 0 || n > kMaxVars) throw MathError("unsupported group rank");
}

std::size_t GroupAction::order() const {
  std::size_t perms = 1, signs = 1;
  for (int i = 2; i <= n_; ++i) perms *= i;
  for (int i = 0; i < n_; ++i) signs *= 2;
  switch (kind_) {
    case GroupKind::SigmaN: return perms;
    case GroupKind::HyperoctahedralWreath: return perms * signs;
    case GroupKind::EvenSignSubgroup: return n_ == 0 ? 1 : perms * signs / 2;
    case GroupKind::SignOnly: return signs;
  }
  return 0;
}

std::vector<GroupElement> GroupAction::elements() const {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n_);
  std::iota(p.begin(), p.end(), 0);
  if (kind_ == GroupKind::SignOnly) {
    perms.push_back(p);
  } else {
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<int>> signs;
  if (kind_ == GroupKind::SigmaN) {
    signs.push_back(std::vector<int>(n_, 1));
  } else {
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
      if (kind_ == GroupKind::EvenSignSubgroup && __builtin_popcount(mask) % 2) continue;
      std::vector<int> s(n_);
      for (int i = 0; i < n_; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
      signs.push_back(s);
    }
  }
  std::vector<GroupElement> out;
  for (auto& q : perms)
    for (auto& s : signs) out.push_back({q, s});
  return out;
}

std::vector<GroupElement> GroupAction::generators() const {
  std::vector<GroupElement> gens;
  std::vector<int> id(n_);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> plus(n_, 1);
  if (kind_ != GroupKind::SignOnly) {
    for (int i = 0; i + 1 < n_; ++i) {
      auto p = id;
      std::swap(p[i], p[i + 1]);
      gens.push_back({p, plus});
    }
  }
  if (kind_ == GroupKind::HyperoctahedralWreath && n_ >= 1) {
    auto s = plus;
    s[0] = -1;
    gens.push_back({id, s});
  } else if (kind_ == GroupKind::EvenSignSubgroup && n_ >= 2) {
    auto s = plus;
    s[0] = s[1] = -1;
    gens.push_back({id, s});
  } else if (kind_ == GroupKind::SignOnly) {
    for (int i = 0; i < n_; ++i) {
      auto s = plus;
      s[i] = -1;
      gens.push_back({id, s});
    }
  }
  return gens;
}

TorusPolynomial act(const GroupElement& g, const TorusPolynomial& p) {
  int k = int(g.perm.size());
  if (k > p.n()) throw MathError("group rank exceeds variable count");
  TorusPolynomial r(p.n(), p.ring());
  for (auto& [m, c] : p.terms()) {
    Monomial t = m;
    int sign = 1;
    for (int i = 0; i < k; ++i) {
      int j = g.perm[i];
      t.a[j] = m.a[i];
      t.set_u(j, m.u(i));
      if (g.sign[j] < 0 && (m.a[i] & 1)) sign = -sign;
    }
    r.add_term(t, sign < 0 ? -c : c);
  }
  return r;
}

TorusPolynomial symmetrize(const TorusPolynomial& p, const GroupAction& W) {
  TorusPolynomial r(p.n(), p.ring());
  for (auto& g : W.elements()) r += act(g, p);
  return r;
}

bool is_invariant(const TorusPolynomial& p, const GroupAction& W) {
  if (W.n() > p.n()) throw MathError("group rank exceeds variable count");
  for (auto& g : W.generators())
    if (!(act(g, p) == p)) return false;
  return true;
}

SubstitutionMap::SubstitutionMap(int source_n, int target_n, std::vector<TorusPolynomial> w_images,
                                 std::vector<TorusPolynomial> u_images)
    : source_n_(source_n), target_n_(target_n), w_images_(std::move(w_images)),
      u_images_(std::move(u_images)) {
  if (int(w_images_.size()) != source_n || int(u_images_.size()) != source_n)
    throw MathError("substitution needs one image per source variable");
  ring_ = Ring::Q;
  for (auto& p : w_images_)
    if (p.ring() == Ring::A) ring_ = Ring::A;
  for (auto& p : u_images_)
    if (p.ring() == Ring::A) ring_ = Ring::A;
  for (auto* v : {&w_images_, &u_images_})
    for (auto& p : *v) {
      if (p.n() != target_n) throw MathError("substitution image has the wrong variable count");
      if (p.ring() != ring_) p = p.promote();
    }
  for (auto& p : w_images_) {
    auto d = p.homogeneous_degree();
    if (!p.is_zero() && (!d || *d != 1)) throw MathError("w-image must be homogeneous of degree 1");
    if (!p.u_free()) throw MathError("w-image must be u-free");
  }
  for (auto& p : u_images_) {
    auto d = p.homogeneous_degree();
    if (!p.is_zero() && (!d || *d != 0)) throw MathError("u-image must have degree 0");
    if (!(p * p == p)) throw MathError("u-image is not idempotent: " + to_text(p));
  }
}

SubstitutionMap SubstitutionMap::identity(int n, Ring ring) {
  std::vector<TorusPolynomial> w, u;
  for (int i = 0; i < n; ++i) {
    w.push_back(TorusPolynomial::w(n, ring, i));
    u.push_back(TorusPolynomial::u(n, ring, i));
  }
  return SubstitutionMap(n, n, w, u);
}

SubstitutionMap SubstitutionMap::after(const SubstitutionMap& g) const {
  if (g.target_n() != source_n_) throw MathError("composition variable-count mismatch");
  std::vector<TorusPolynomial> w, u;
  for (auto& p : g.w_images()) w.push_back(substitute(*this, ring_ == Ring::A ? p.promote() : p));
  for (auto& p : g.u_images()) u.push_back(substitute(*this, ring_ == Ring::A ? p.promote() : p));
  return SubstitutionMap(g.source_n(), target_n_, w, u);
}

TorusPolynomial substitute(const SubstitutionMap& f, const TorusPolynomial& p) {
  if (p.n() != f.source_n()) throw MathError("variable-count mismatch in substitution");
  Ring ring = (p.ring() == Ring::A || f.ring() == Ring::A) ? Ring::A : Ring::Q;
  auto lift = [&](const TorusPolynomial& q) { return q.ring() == ring ? q : q.promote(); };
  std::vector<std::vector<TorusPolynomial>> powers(f.source_n());
  auto wpow = [&](int i, int k) -> const TorusPolynomial& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(TorusPolynomial::constant(f.target_n(), ring, Burnside(1)));
    while (int(v.size()) <= k) v.push_back(v.back() * lift(f.w_images()[i]));
    return v[k];
  };
  TorusPolynomial r(f.target_n(), ring);
  for (auto& [m, c] : p.terms()) {
    TorusPolynomial t = TorusPolynomial::constant(f.target_n(), ring, c);
    for (int i = 0; i < f.source_n() && !t.is_zero(); ++i) {
      if (m.a[i]) t = t * wpow(i, m.a[i]);
      if (m.u(i)) t = t * lift(f.u_images()[i]);
    }
    r += t;
  }
  return r;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<Monomial> wparts;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur.a[i] = uint8_t(left);
      wparts.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.a[i] = uint8_t(k);
      rec(i + 1, left - k);
    }
    cur.a[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(0, d);
  for (auto& m : wparts)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Monomial t = m;
      for (int i = 0; i < n; ++i) t.set_u(i, (mask >> i) & 1);
      out.push_back(t);
    }
  return out;
}

std::size_t invariant_dimension(const GroupAction& W, int n, int d, Ring ring) {
  if (W.n() != n) throw MathError("group rank differs from n");
  auto monos = monomials_of_degree(n, d);
  if (double(monos.size()) * double(W.order()) > 5e7)
    throw MathError("invariant_dimension: resource bound exceeded");
  auto elems = W.elements();
  MonomialIndex idx;
  RowReducer rr;
  for (auto& m : monos) {
    TorusPolynomial p = TorusPolynomial::monomial(n, ring, m);
    TorusPolynomial avg(n, ring);
    for (auto& g : elems) avg += act(g, p);
    rr.add(idx.vectorize(avg));
    if (ring == Ring::A && !m.has_u()) {
      TorusPolynomial px = TorusPolynomial::monomial(n, ring, m, Burnside::x());
      TorusPolynomial avgx(n, ring);
      for (auto& g : elems) avgx += act(g, px);
      rr.add(idx.vectorize(avgx));
    }
  }
  return rr.rank();
}

}  // namespace equichar
