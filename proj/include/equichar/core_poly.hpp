#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichar {

using Rational = mpq_class;

class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);
bool is_integer(const Rational& r);

// Element q + qx*x of the rational Burnside ring, x^2 = 2x.
class Burnside {
public:
  Rational q;
  Rational qx;

  Burnside() = default;
  Burnside(long v) : q(v) {}
  Burnside(const Rational& a) : q(a) {}
  Burnside(const Rational& a, const Rational& b) : q(a), qx(b) {}

  static Burnside x() { return Burnside(0, 1); }
  static Burnside y() { return Burnside(1, Rational(-1, 2)); }
  // Inverse of the ring isomorphism to Q x Q.
  static Burnside from_sides(const Rational& xside, const Rational& yside);

  bool is_zero() const { return sgn(q) == 0 && sgn(qx) == 0; }
  bool has_x() const { return sgn(qx) != 0; }
  Rational xside() const { return q + 2 * qx; }
  const Rational& yside() const { return q; }

  Burnside operator-() const { return Burnside(-q, -qx); }
  Burnside& operator+=(const Burnside& o);
  Burnside& operator-=(const Burnside& o);
  Burnside& operator*=(const Burnside& o);
  friend Burnside operator+(Burnside a, const Burnside& b) { return a += b; }
  friend Burnside operator-(Burnside a, const Burnside& b) { return a -= b; }
  friend Burnside operator*(Burnside a, const Burnside& b) { return a *= b; }
  friend bool operator==(const Burnside& a, const Burnside& b) { return a.q == b.q && a.qx == b.qx; }

  std::string str() const;
};

enum class Ring { Q, A };

const char* ring_name(Ring r);

constexpr int kMaxVars = 8;

// w_1^a_1 ... w_n^a_n u_1^e_1 ... u_n^e_n. Default ordering is the lexicographic
// order on (a_1..a_n, e_1..e_n); eps keeps e_1 in the high bit.
struct Monomial {
  std::array<uint8_t, kMaxVars> a{};
  uint16_t eps = 0;

  static constexpr uint16_t bit(int i) { return uint16_t(1u << (kMaxVars - 1 - i)); }
  bool u(int i) const { return eps & bit(i); }
  void set_u(int i, bool on) {
    if (on) eps |= bit(i);
    else eps &= uint16_t(~bit(i));
  }
  bool has_u() const { return eps != 0; }
  int degree() const;
  int u_count() const;
  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
};

std::string to_text(const Monomial& m, int n);

class TorusPolynomial {
public:
  using Terms = std::map<Monomial, Burnside, std::greater<Monomial>>;

  explicit TorusPolynomial(int n = 0, Ring ring = Ring::Q);

  static TorusPolynomial constant(int n, Ring ring, const Burnside& c);
  static TorusPolynomial monomial(int n, Ring ring, const Monomial& m, const Burnside& c = Burnside(1));
  static TorusPolynomial w(int n, Ring ring, int i);
  static TorusPolynomial u(int n, Ring ring, int i);

  int n() const { return n_; }
  Ring ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Burnside coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Burnside& c);

  // Common degree of all terms, nullopt for mixed degrees. Zero has degree 0.
  std::optional<int> homogeneous_degree() const;
  std::map<int, TorusPolynomial> homogeneous_parts() const;
  bool u_free() const;

  TorusPolynomial promote() const;
  // Component rings of A under (q, qx) -> (q + 2qx, q), as Q-polynomials.
  TorusPolynomial x_side() const;
  TorusPolynomial y_side() const;
  static TorusPolynomial from_sides(const TorusPolynomial& xside, const TorusPolynomial& yside);

  TorusPolynomial& operator+=(const TorusPolynomial& o);
  TorusPolynomial& operator-=(const TorusPolynomial& o);
  TorusPolynomial& operator*=(const Burnside& c);
  TorusPolynomial operator-() const;
  friend TorusPolynomial operator+(TorusPolynomial a, const TorusPolynomial& b) { return a += b; }
  friend TorusPolynomial operator-(TorusPolynomial a, const TorusPolynomial& b) { return a -= b; }
  friend TorusPolynomial operator*(const TorusPolynomial& a, const TorusPolynomial& b);
  friend TorusPolynomial operator*(TorusPolynomial a, const Burnside& c) { return a *= c; }
  friend TorusPolynomial operator*(const Burnside& c, TorusPolynomial a) { return a *= c; }
  friend bool operator==(const TorusPolynomial& a, const TorusPolynomial& b);

  TorusPolynomial pow(int k) const;

private:
  void check_compatible(const TorusPolynomial& o) const;
  void reduce_coeff(const Monomial& m, Burnside& c) const;

  int n_;
  Ring ring_;
  Terms terms_;
};

Monomial dominant_term(const TorusPolynomial& p);

// Canonical text: terms in descending order, e.g. "3/2*w1^2*u2 - w2".
std::string to_text(const TorusPolynomial& p);
TorusPolynomial parse_torus(const std::string& text, int n, Ring ring);

enum class GroupKind { SigmaN, HyperoctahedralWreath, EvenSignSubgroup, SignOnly };

struct GroupElement {
  std::vector<int> perm;  // 0-based image of each index
  std::vector<int> sign;  // +1 / -1, indexed by target position
};

// Acts on the first n variable pairs; higher slots are fixed.
class GroupAction {
public:
  GroupAction(GroupKind kind, int n);
  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> generators() const;
  std::size_t order() const;

private:
  GroupKind kind_;
  int n_;
};

TorusPolynomial act(const GroupElement& g, const TorusPolynomial& p);
TorusPolynomial symmetrize(const TorusPolynomial& p, const GroupAction& W);
bool is_invariant(const TorusPolynomial& p, const GroupAction& W);

class SubstitutionMap {
public:
  SubstitutionMap(int source_n, int target_n, std::vector<TorusPolynomial> w_images,
                  std::vector<TorusPolynomial> u_images);

  static SubstitutionMap identity(int n, Ring ring);

  int source_n() const { return source_n_; }
  int target_n() const { return target_n_; }
  Ring ring() const { return ring_; }
  const std::vector<TorusPolynomial>& w_images() const { return w_images_; }
  const std::vector<TorusPolynomial>& u_images() const { return u_images_; }

  // (f.after(g))(p) = f(g(p)).
  SubstitutionMap after(const SubstitutionMap& g) const;

private:
  int source_n_;
  int target_n_;
  Ring ring_;
  std::vector<TorusPolynomial> w_images_;
  std::vector<TorusPolynomial> u_images_;
};

TorusPolynomial substitute(const SubstitutionMap& f, const TorusPolynomial& p);

// All monic monomials of w-degree d in n variable pairs.
std::vector<Monomial> monomials_of_degree(int n, int d);

// dim_Q of the W-invariant degree-d piece of R (over A, counted over Q).
std::size_t invariant_dimension(const GroupAction& W, int n, int d, Ring ring = Ring::Q);

}  // namespace equichar
