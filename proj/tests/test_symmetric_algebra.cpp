#include "equichar/symmetric_algebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace equichar;

namespace {

TorusPolynomial P(const std::string& s, int n, Ring r = Ring::Q) { return parse_torus(s, n, r); }

GeneratorPolynomial G(const Symbol& g, Ring r = Ring::Q) { return GeneratorPolynomial::monomial(r, {g}); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("gamma expansion") {
  CHECK(gamma_expand(1, 1, 2) == P("w1*u2 + w2*u1", 2));
  CHECK(gamma_expand(2, 0, 2) == P("w1*w2", 2));
  CHECK(gamma_expand(0, 2, 3) == P("u1*u2 + u1*u3 + u2*u3", 3));
  for (int n = 0; n <= 5; ++n)
    for (int s = 0; s <= n; ++s)
      for (int i = 0; s + i <= n; ++i) CHECK(gamma_expand(s, i, n) == oracle::gamma(s, i, n));
  CHECK_THROWS_AS(gamma_expand(2, 1, 2), MathError);
}

TEST_CASE("decompose examples") {
  TorusModel m2 = TorusModel::unitary(2, Ring::Q);
  GeneratorPolynomial p = decompose(gamma_expand(0, 1, 2) * gamma_expand(1, 1, 2), m2);
  CHECK(to_text(p) == "g_{1,1} + e1*g_{0,2}");
  CHECK(to_text(decompose(P("w1 + w2 + w3", 3), 3)) == "e1");
  CHECK(to_text(decompose(P("w1^2 + w2^2", 2), 2)) == "-2 e2 + e1^2");
  CHECK(decompose(TorusPolynomial(2), 2).is_zero());
  CHECK_THROWS_AS(decompose(P("w1", 2), 2), MathError);
}

TEST_CASE("Newton identities") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<GeneratorPolynomial> p(7, GeneratorPolynomial(Ring::Q));
    auto e = [&](int i) { return i <= n ? G(Symbol::gamma(i, 0)) : GeneratorPolynomial(Ring::Q); };
    for (int k = 1; k <= 6; ++k) {
      GeneratorPolynomial r = Burnside(k % 2 ? k : -k) * e(k);
      for (int i = 1; i < k; ++i) r += Burnside(i % 2 ? 1 : -1) * (e(i) * p[k - i]);
      p[k] = r;
      TorusPolynomial power(n, Ring::Q);
      for (int v = 0; v < n; ++v) power += TorusPolynomial::w(n, Ring::Q, v).pow(k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(decompose(power, n) == p[k]);
    }
  }
}

TEST_CASE("factorization of dominant terms") {
  Monomial m;
  m.a[0] = 2;
  m.a[1] = 1;
  m.set_u(1, true);
  m.set_u(2, true);
  Factorization f = factor_for_dominant(m, 3);
  CHECK(to_text(GeneratorPolynomial::monomial(Ring::Q, f.factors)) == "e2*g_{1,2}");
  CHECK(f.coeff == 1);

  for (int k = 1; k <= 4; ++k) {
    Monomial u;
    for (int i = 0; i < k; ++i) u.set_u(i, true);
    CHECK(factor_for_dominant(u, 4).factors == GenMonomial{Symbol::gamma(0, k)});
  }
  // w1^3 w2^2 u3: e-part (2, 1) times gamma_{2,1}
  Monomial w;
  w.a[0] = 3;
  w.a[1] = 2;
  w.set_u(2, true);
  GenMonomial expect = GenMonomial{Symbol::gamma(1, 0)} * GenMonomial{Symbol::gamma(2, 0)} *
                       GenMonomial{Symbol::gamma(2, 1)};
  CHECK(factor_for_dominant(w, 3).factors == expect);
  // consecutive u's on equal exponents are orbit maxima
  Monomial c;
  c.a[0] = c.a[1] = 1;
  c.set_u(0, true);
  c.set_u(1, true);
  CHECK(is_orbit_max(c, 2));
}

TEST_CASE("round trip on random invariants") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    int n = 1 + k % 4;
    Ring ring = k % 3 ? Ring::Q : Ring::A;
    TorusPolynomial p(n, ring);
    std::uniform_int_distribution<int> c(-9, 9), d(0, 5), v(0, n - 1), b(0, 1);
    for (int t = 0; t < 3; ++t) {
      Monomial m;
      for (int e = d(rng); e > 0; --e) ++m.a[v(rng)];
      for (int i = 0; i < n; ++i) m.set_u(i, b(rng));
      p.add_term(m, ring == Ring::A ? Burnside(c(rng), c(rng)) : Burnside(c(rng)));
    }
    p = symmetrize(p, GroupAction(GroupKind::SigmaN, n));
    TorusModel model = TorusModel::unitary(n, ring);
    GeneratorPolynomial g = decompose(p, model);
    CHECK(model.expand(g) == p);
    for (const auto& [mono, coeff] : g.terms()) CHECK(is_admissible(mono));
  }
}

TEST_CASE("relations") {
  auto one = relation_set(1);
  REQUIRE(one.size() == 1);
  CHECK(to_text(one[0]) == "u^2 = u");

  RelationEntry r = relation(0, 1, 1, 1, 2);
  CHECK(r.leading_coeff == 1);
  CHECK(r.expected_coeff == 1);
  CHECK(to_text(r) == "u*g_{1,1} = e1*g_{0,2} + g_{1,1}");
  CHECK_THROWS_AS(relation(1, 1, 0, 1, 2), MathError);

  for (int n = 1; n <= 4; ++n) {
    std::size_t window = 0;
    for (int s = 0; s <= n; ++s)
      for (int i = 1; i <= n - s; ++i)
        for (int t = s; t <= s + i; ++t)
          for (int j = 1; j <= n - t; ++j) ++window;
    auto set = relation_set(n);
    CHECK(set.size() == window);
    for (const auto& e : set) {
      CAPTURE(to_text(e));
      RelationCheck c = check_relation(e);
      CHECK(c.identity);
      CHECK(c.integral);
      CHECK(c.tail_smaller);
      CHECK(c.overlap_law);
      CHECK(e.expected_coeff == binom(std::min(e.i + e.j + e.s, n) - e.t, e.j));
      // the binomial law holds exactly when the u-sets need not overlap
      int forced = e.i + e.j - std::min(e.i + e.j, n - e.s);
      CHECK(c.leading_law == (binom(e.j, forced) == 1));
    }
  }
}

TEST_CASE("relation set is independent of threads and cache") {
  auto serial = relation_set(3);
  auto parallel = relation_set(3, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(to_text(serial[k]) == to_text(parallel[k]));

  auto dir = std::filesystem::temp_directory_path() / "equichar_cache_test";
  std::filesystem::remove_all(dir);
  RelationCache cache(dir);
  auto cold = relation_set(3, 1, &cache);
  CHECK(cache.load(1, 1, 1, 1, 3).has_value());
  auto warm = relation_set(3, 1, &cache);
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(to_text(cold[k]) == to_text(serial[k]));
    CHECK(to_text(warm[k]) == to_text(serial[k]));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("Type I relation") {
  for (int n = 1; n <= 4; ++n) {
    TorusPolynomial u(n, Ring::Q), prod = TorusPolynomial::constant(n, Ring::Q, 1);
    for (int i = 0; i < n; ++i) u += TorusPolynomial::u(n, Ring::Q, i);
    for (int k = 0; k <= n; ++k) prod = prod * (u - TorusPolynomial::constant(n, Ring::Q, k));
    CHECK(prod.is_zero());
    auto r = type_one_coefficients(n);
    REQUIRE(r.size() == std::size_t(n));
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(r[0] == (n % 2 ? fact : -fact));
    TorusPolynomial rhs(n, Ring::Q);
    for (int m = 1; m <= n; ++m) rhs += u.pow(m) * Burnside(r[m - 1]);
    CHECK(u.pow(n + 1) == rhs);
  }
}

TEST_CASE("basis") {
  auto text = [](int n, int d) {
    std::vector<std::string> out;
    for (const auto& b : basis(n, d)) out.push_back(to_text(GeneratorPolynomial::monomial(Ring::Q, b.monomial())));
    return out;
  };
  CHECK(text(2, 0) == std::vector<std::string>{"1", "u", "g_{0,2}"});
  CHECK(text(2, 1) == std::vector<std::string>{"e1", "u*e1", "e1*g_{0,2}", "g_{1,1}"});
  CHECK(text(1, 3) == std::vector<std::string>{"e1^3", "u*e1^3"});
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(basis(n, d).size() == oracle::invariant_count(n, d, oracle::Signs::None, Ring::Q));
      CHECK(corollary_basis(n, d).size() == basis(n, d).size());
      std::vector<int> edeg;
      for (int k = 1; k <= n; ++k) edeg.push_back(k);
      CHECK(partition_p(n, d) == oracle::weighted_monomials(edeg, d));
      CHECK(weighted_basis_count(n, d) == basis(n, d).size() + oracle::weighted_monomials(edeg, d));
      CHECK(dim_u(n, d) == oracle::invariant_count(n, d, oracle::Signs::None, Ring::A));
    }
  CHECK(dim_u(1, 0) == 3);
  CHECK(dim_u(2, 1) == 5);
  for (int k = 1; k <= 6; ++k) CHECK(dim_u(1, k) == 3);
}

TEST_CASE("minimality") {
  for (int n = 1; n <= 3; ++n) CHECK(minimality_certificate(n).cardinality == std::size_t(1 + n + binom(n, 2)));
  CHECK(minimality_certificate(1).ok());
  CHECK(minimality_certificate(2).ok());
  // g_{1,2} and g_{2,1} are decomposable at n = 3
  MinimalityReport m3 = minimality_certificate(3);
  CHECK_FALSE(m3.ok());
  std::vector<std::string> dependent;
  for (const auto& [g, ind] : m3.independent)
    if (!ind) dependent.push_back(to_text(g));
  CHECK(dependent == std::vector<std::string>{"g_{1,2}", "g_{2,1}"});
  GeneratorPolynomial u = G(Symbol::gamma(0, 1)), e1 = G(Symbol::gamma(1, 0)), g11 = G(Symbol::gamma(1, 1));
  GeneratorPolynomial g02 = Burnside(Rational(1, 2)) * (u * u - u);
  TorusModel m = TorusModel::unitary(3, Ring::Q);
  CHECK(m.expand(Symbol::gamma(1, 2)) == m.expand(u * g11 - e1 * g02 - g11));
}
