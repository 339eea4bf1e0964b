#pragma once

#include "equichar/core_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equichar {

enum class StemLevel { Top, Bottom };

// Homological bidegree (k, n) of H^G_{k + n sigma}, with k = n for the orientation classes.
struct Bidegree {
  int k = 0;
  int n = 0;
  auto operator<=>(const Bidegree&) const = default;
};

struct StemClass {
  // Top: One, X, U2s (u_2s^j), XU2s (x/u_2s^j), As (a_s^j), YAs (y/a_s^j), all with j >= 1 where used.
  // Bottom: Us (u_s^j), j in Z.
  enum Kind : uint8_t { One, X, U2s, XU2s, As, YAs, Us };
  Kind kind = One;
  int j = 0;

  StemLevel level() const { return kind == Us ? StemLevel::Bottom : StemLevel::Top; }
  Bidegree bidegree() const;
  auto operator<=>(const StemClass&) const = default;
};

std::string to_text(const StemClass& c);

class StemElement {
public:
  explicit StemElement(StemLevel level = StemLevel::Top) : level_(level) {}
  static StemElement basis(const StemClass& c, const Rational& coeff = 1);
  static StemElement y();

  StemLevel level() const { return level_; }
  const std::map<StemClass, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Bidegree> bidegree() const;
  Rational coeff(const StemClass& c) const;

  StemElement& operator+=(const StemElement& o);
  StemElement& operator*=(const Rational& c);
  friend StemElement operator+(StemElement a, const StemElement& b) { return a += b; }
  friend StemElement operator-(StemElement a, const StemElement& b) {
    StemElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend StemElement operator*(StemElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const StemElement& a, const StemElement& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

private:
  void add_term(const StemClass& c, const Rational& v);
  StemLevel level_;
  std::map<StemClass, Rational> terms_;
};

std::string to_text(const StemElement& e);
// Accepts 1, x, y, a_s^j, u_2s^j, x/u_2s^j, y/a_s^j, u_s^j, with an optional "q*" coefficient prefix.
StemElement parse_stem(const std::string& text);

struct StemGroup {
  std::string name;  // A_Q, M0, M0-, M1, 0
  std::vector<StemClass> top;
  std::vector<StemClass> bottom;
};
StemGroup stem_group(int k, int n);

StemElement stem_mul(const StemElement& a, const StemElement& b);
StemElement res(const StemElement& a);
StemElement tr(const StemElement& a);
// Generator of the Weyl group on the bottom level: u_s -> -u_s.
StemElement weyl(const StemElement& a);

struct StemReport {
  bool commutative = true;
  bool associative = true;
  bool zero_group_coherent = true;
  bool res_multiplicative = true;
  bool weyl_multiplicative = true;
  bool laurent = true;
  bool frobenius = true;
  std::size_t classes = 0;
  std::size_t frobenius_pairs = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return commutative && associative && zero_group_coherent && res_multiplicative && weyl_multiplicative &&
           laurent && frobenius;
  }
};
// Exhaustive over basis classes with |j| <= max_j, Frobenius on random pairs.
StemReport verify_stems(int max_j = 3, int frobenius_pairs = 100, unsigned seed = 20190401);

// Solve c^2 = a_s^2 c + u_2s b with c = w u_2s + u a_s^2 and b in span{w^2 u_2s, w a_s^2},
// together with w = c x/(2 u_2s) + b y/a_s^2, in A[w,u]/(u^2 = u, xu) tensor the stems.
struct ComparisonReport {
  std::optional<std::vector<Rational>> solution;  // coefficients of w^2 u_2s, w a_s^2
  bool unique = false;
  bool u_identity = false;                        // u = c y/a_s^2
  bool negated_b_satisfies_relation = false;        // b = -w^2 u_2s + w a_s^2
  bool negated_b_satisfies_w_identity = false;
  std::string solved_b;
};
ComparisonReport shu_comparison();

}  // namespace equichar
