#include "equichar/core_poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace equichar;

namespace {

TorusPolynomial P(const std::string& s, int n, Ring r = Ring::Q) { return parse_torus(s, n, r); }

TorusPolynomial random_poly(std::mt19937& rng, int n, Ring ring) {
  std::uniform_int_distribution<int> c(-9, 9), d(0, 5), v(0, n - 1), b(0, 1), den(1, 4);
  TorusPolynomial p(n, ring);
  for (int t = 0; t < 5; ++t) {
    Monomial m;
    for (int e = d(rng); e > 0; --e) ++m.a[v(rng)];
    for (int i = 0; i < n; ++i) m.set_u(i, b(rng));
    auto q = [&] {
      Rational r(c(rng), den(rng));
      r.canonicalize();
      return r;
    };
    Burnside k(q());
    if (ring == Ring::A) k.qx = q();
    p.add_term(m, k);
  }
  return p;
}

}  // namespace

TEST_CASE("Burnside ring") {
  Burnside x = Burnside::x(), y = Burnside::y();
  CHECK(x * x == Burnside(2) * x);
  CHECK(y * y == y);
  CHECK((x * y).is_zero());
  CHECK(x.xside() == 2);
  CHECK(x.yside() == 0);
  Burnside b = Burnside::from_sides(Rational(3, 2), -5);
  CHECK(b.xside() == Rational(3, 2));
  CHECK(b.yside() == -5);
  CHECK(Burnside(1) == y + Rational(1, 2) * x);
}

TEST_CASE("ring operations") {
  CHECK(P("u1", 1) * P("u1", 1) == P("u1", 1));
  CHECK(P("w1 + w2", 2) * P("w1 - w2", 2) == P("w1^2 - w2^2", 2));
  CHECK(P("u1 + u2", 2) * P("w1*u2 + w2*u1", 2) == P("w1*u1*u2 + w2*u1*u2 + w1*u2 + w2*u1", 2));
  CHECK(P("w1 + u1", 1).pow(3) == P("w1^3 + 3*w1^2*u1 + 3*w1*u1 + u1", 1));
  // x u = 0 in the A-model
  CHECK((TorusPolynomial::u(1, Ring::A, 0) * Burnside::x()).is_zero());
  CHECK(P("(1 + x)*u1", 1, Ring::A) == P("u1", 1, Ring::A));
  CHECK_THROWS_AS(P("w1", 1) + P("w1", 1, Ring::A), MathError);
  CHECK(P("w1", 1).promote() + P("w1", 1, Ring::A) == P("2*w1", 1, Ring::A));
}

TEST_CASE("sides of A") {
  TorusPolynomial p = P("(1 + 1/2 x)*w1 + 3*u1*w1 + x", 1, Ring::A);
  CHECK(p.x_side() == P("2*w1 + 2", 1));
  CHECK(p.y_side() == P("w1 + 3*w1*u1", 1));
  CHECK(TorusPolynomial::from_sides(p.x_side(), p.y_side()) == p);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    int n = 1 + k % 4;
    Ring ring = k % 2 ? Ring::A : Ring::Q;
    TorusPolynomial p = random_poly(rng, n, ring);
    CHECK(parse_torus(to_text(p), n, ring) == p);
  }
  CHECK(to_text(P("w2 + 3/2*w1^2*u2", 2)) == "3/2*w1^2*u2 + w2");
  CHECK(to_text(TorusPolynomial(3)) == "0");
  CHECK_THROWS_AS(P("w3", 2), MathError);
  CHECK_THROWS_AS(P("w1 +", 2), MathError);
}

TEST_CASE("dominant term") {
  Monomial w1u2;
  w1u2.a[0] = 1;
  w1u2.set_u(1, true);
  CHECK(dominant_term(P("w1*u2 + w2*u1", 2)) == w1u2);
  Monomial m;
  m.a[0] = 2;
  m.set_u(1, true);
  m.set_u(2, true);
  TorusPolynomial g = oracle::gamma(1, 1, 3);
  CHECK(dominant_term(g * g) == m);
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= n; ++s)
      for (int i = 0; s + i <= n; ++i) {
        Monomial d;
        for (int k = 0; k < s; ++k) d.a[k] = 1;
        for (int k = s; k < s + i; ++k) d.set_u(k, true);
        CHECK(dominant_term(oracle::gamma(s, i, n)) == d);
      }
}

TEST_CASE("group actions") {
  GroupElement swap{{1, 0}, {1, 1}};
  CHECK(act(swap, P("w1*u2", 2)) == P("w2*u1", 2));
  GroupElement sign{{0, 1}, {-1, 1}};
  CHECK(act(sign, P("w1 + w2", 2)) == P("-w1 + w2", 2));
  for (const auto& g : GroupAction(GroupKind::SigmaN, 2).elements()) CHECK(act(g, P("w1*w2", 2)) == P("w1*w2", 2));

  CHECK(symmetrize(P("w1", 2), GroupAction(GroupKind::SigmaN, 2)) == P("w1 + w2", 2));
  CHECK(symmetrize(P("w1*u2", 2), GroupAction(GroupKind::SigmaN, 2)) == oracle::gamma(1, 1, 2));
  CHECK(symmetrize(P("w1", 1), GroupAction(GroupKind::HyperoctahedralWreath, 1)).is_zero());

  CHECK(is_invariant(oracle::gamma(1, 1, 2), GroupAction(GroupKind::SigmaN, 2)));
  CHECK_FALSE(is_invariant(P("w1", 2), GroupAction(GroupKind::SigmaN, 2)));
  CHECK(is_invariant(P("w1^2 + w2^2", 2), GroupAction(GroupKind::HyperoctahedralWreath, 2)));
  CHECK(is_invariant(P("w1*w2", 2), GroupAction(GroupKind::EvenSignSubgroup, 2)));
  CHECK_FALSE(is_invariant(P("w1*w2", 2), GroupAction(GroupKind::HyperoctahedralWreath, 2)));

  CHECK(GroupAction(GroupKind::SigmaN, 4).order() == 24);
  CHECK(GroupAction(GroupKind::HyperoctahedralWreath, 3).order() == 48);
  CHECK(GroupAction(GroupKind::EvenSignSubgroup, 3).order() == 24);
  CHECK(GroupAction(GroupKind::SignOnly, 3).order() == 8);
}

TEST_CASE("substitution") {
  int n = 2;
  SubstitutionMap sp1(n, 1, {P("w1", 1), P("-w1", 1)}, {P("u1", 1), P("u1", 1)});
  CHECK(substitute(sp1, P("w1*w2", 2)) == P("-w1^2", 1));
  TorusPolynomial p = P("3*w1^2*u2 - w2 + 1/2", 2);
  CHECK(substitute(SubstitutionMap::identity(2, Ring::Q), p) == p);
  SubstitutionMap conj(2, 2, {P("-w1", 2), P("-w2", 2)}, {P("u1", 2), P("u2", 2)});
  CHECK(substitute(conj, oracle::gamma(1, 1, 2)) == -oracle::gamma(1, 1, 2));
  CHECK(substitute(conj.after(conj), p) == p);
  SubstitutionMap conj1(1, 1, {P("-w1", 1)}, {P("u1", 1)});
  CHECK(substitute(conj1.after(sp1), P("w1*u2", 2)) == P("-w1*u1", 1));
  CHECK(substitute(conj1.after(sp1), p) == substitute(conj1, substitute(sp1, p)));
  CHECK_THROWS_AS(conj.after(sp1), MathError);
}

TEST_CASE("invariant dimension against orbit counting") {
  CHECK(invariant_dimension(GroupAction(GroupKind::SigmaN, 1), 1, 0) == 2);
  CHECK(invariant_dimension(GroupAction(GroupKind::SigmaN, 2), 2, 1) == 4);
  CHECK(invariant_dimension(GroupAction(GroupKind::HyperoctahedralWreath, 1), 1, 1) == 0);
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(monomials_of_degree(n, d).size() == oracle::monomials(n, d).size());
      for (Ring r : {Ring::Q, Ring::A}) {
        CHECK(invariant_dimension(GroupAction(GroupKind::SigmaN, n), n, d, r) ==
              oracle::invariant_count(n, d, oracle::Signs::None, r));
        CHECK(invariant_dimension(GroupAction(GroupKind::HyperoctahedralWreath, n), n, d, r) ==
              oracle::invariant_count(n, d, oracle::Signs::All, r));
        CHECK(invariant_dimension(GroupAction(GroupKind::EvenSignSubgroup, n), n, d, r) ==
              oracle::invariant_count(n, d, oracle::Signs::Even, r));
      }
    }
}
