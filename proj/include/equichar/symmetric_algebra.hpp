#pragma once

#include "equichar/core_poly.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equichar {

// Letter set used when printing generator symbols.
enum class Letters { U, Sp, SO };

// Abstract generator. cat fixes the display order: u, delta, e_s, chi, gamma_{s,i}.
struct Symbol {
  enum Cat : uint8_t { U = 0, Delta = 1, E = 2, Chi = 3, Gamma = 4 };

  uint8_t side = 0;
  uint8_t cat = U;
  uint8_t s = 0;
  uint8_t i = 0;

  static Symbol gamma(int s, int i, int side = 0);
  static Symbol chi(int side = 0);
  static Symbol delta(int side = 0);

  bool is_gamma() const { return cat == U || cat == E || cat == Gamma; }
  // Symbols annihilated by x.
  bool x_killed() const { return cat == Delta || (is_gamma() && i > 0); }

  auto operator<=>(const Symbol&) const = default;
};

std::string to_text(const Symbol& g, Letters letters = Letters::U);

// Sorted multiset of symbols; the empty monomial is 1.
using GenMonomial = std::vector<Symbol>;

GenMonomial operator*(const GenMonomial& a, const GenMonomial& b);
std::string to_text(const GenMonomial& m, const std::vector<Letters>& sides);

// Fewer factors first, then lexicographic on the sorted factor lists.
struct GenOrder {
  bool operator()(const GenMonomial& a, const GenMonomial& b) const;
};

class GeneratorPolynomial {
public:
  using Terms = std::map<GenMonomial, Burnside, GenOrder>;

  explicit GeneratorPolynomial(Ring ring = Ring::Q) : ring_(ring) {}
  static GeneratorPolynomial constant(Ring ring, const Burnside& c);
  static GeneratorPolynomial monomial(Ring ring, const GenMonomial& m, const Burnside& c = Burnside(1));

  Ring ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Burnside coeff(const GenMonomial& m) const;
  void add_term(const GenMonomial& m, const Burnside& c);
  GeneratorPolynomial promote() const;

  GeneratorPolynomial& operator+=(const GeneratorPolynomial& o);
  GeneratorPolynomial& operator-=(const GeneratorPolynomial& o);
  GeneratorPolynomial operator-() const;
  friend GeneratorPolynomial operator+(GeneratorPolynomial a, const GeneratorPolynomial& b) { return a += b; }
  friend GeneratorPolynomial operator-(GeneratorPolynomial a, const GeneratorPolynomial& b) { return a -= b; }
  friend GeneratorPolynomial operator*(const GeneratorPolynomial& a, const GeneratorPolynomial& b);
  friend GeneratorPolynomial operator*(const Burnside& c, const GeneratorPolynomial& a);
  friend bool operator==(const GeneratorPolynomial& a, const GeneratorPolynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

private:
  Ring ring_;
  Terms terms_;
};

std::string coeff_text(const Burnside& c);
std::string to_text(const GeneratorPolynomial& p, const std::vector<Letters>& sides = {Letters::U});

// Ring map on generators: each symbol goes to the given polynomial.
GeneratorPolynomial compose(const GeneratorPolynomial& p, const std::map<Symbol, GeneratorPolynomial>& images,
                            Ring target_ring);

// How a block of torus variables realizes the generators.
//   Plain:   gamma_{s,i} over w, u.
//   Squared: gamma_{s,i} over w^2, u.
//   Even:    as Squared, plus chi = w_1...w_n standing in for gamma_{n,0} = chi^2.
// With delta, one more u-slot after the block carries delta.
enum class BlockKind { Plain, Squared, Even };

struct Block {
  int n = 0;
  BlockKind kind = BlockKind::Plain;
  bool delta = false;
  int offset = 0;
  int width() const { return n + (delta ? 1 : 0); }
};

class TorusModel {
public:
  TorusModel(std::vector<Block> blocks, Ring ring);
  static TorusModel unitary(int n, Ring ring);

  const std::vector<Block>& blocks() const { return blocks_; }
  Ring ring() const { return ring_; }
  int nvars() const { return nvars_; }
  TorusModel with_ring(Ring ring) const { return TorusModel(blocks_, ring); }

  TorusPolynomial expand(const Symbol& g) const;
  TorusPolynomial expand(const GenMonomial& m) const;
  TorusPolynomial expand(const GeneratorPolynomial& p) const;

private:
  std::vector<Block> blocks_;
  Ring ring_;
  int nvars_ = 0;
};

// Sum over disjoint index sets of s w's and i u's, in n variable pairs.
TorusPolynomial gamma_expand(int s, int i, int n, Ring ring = Ring::Q);

struct Factorization {
  GenMonomial factors;
  Rational coeff;  // coefficient of M in the expansion of factors
};

bool is_orbit_max(const Monomial& M, int n);
Factorization factor_for_dominant(const Monomial& M, int n);

GeneratorPolynomial decompose(const TorusPolynomial& p, const TorusModel& model);
GeneratorPolynomial decompose(const TorusPolynomial& p, int n);

// s + i < t for any two flags (s, i), (t, j) with s <= t and i, j >= 1.
bool is_admissible(const GenMonomial& m);

struct RelationEntry {
  int s = 0, i = 0, t = 0, j = 0, n = 0;
  Rational leading_coeff;  // measured
  long expected_coeff = 0;  // C(min(i+j+s,n)-t, j)
  long overlap_coeff = 0;   // expected_coeff * C(j, i+j-min(i+j,n-s))
  GenMonomial leading_product;
  GeneratorPolynomial tail;

  GenMonomial lhs() const;
  GeneratorPolynomial rhs() const;
};

class RelationCache;

bool in_relation_window(int s, int i, int t, int j, int n);
RelationEntry relation(int s, int i, int t, int j, int n, const RelationCache* cache = nullptr);
// Window order (s, t, i, j) ascending; threads > 1 evaluates entries concurrently.
std::vector<RelationEntry> relation_set(int n, int threads = 1, const RelationCache* cache = nullptr);
std::string to_text(const RelationEntry& r, Letters letters = Letters::U);

struct RelationCheck {
  bool identity = false;
  bool integral = false;
  bool tail_smaller = false;
  bool leading_law = false;  // measured == expected_coeff
  bool overlap_law = false;  // measured == overlap_coeff
  bool ok() const { return identity && integral && tail_smaller && overlap_law; }
};
RelationCheck check_relation(const RelationEntry& r);

// Alias-free rewriting: gamma_{0,k} -> u(u-1)...(u-k+1)/k!.
GeneratorPolynomial substitute_u_binomials(const GeneratorPolynomial& p, int n);
// r_1..r_n with u^{n+1} = sum r_m u^m, computed by decomposition.
std::vector<Rational> type_one_coefficients(int n);

struct BasisElement {
  std::vector<int> e_exponents;               // powers of e_1..e_n
  std::vector<std::pair<int, int>> flags;      // gamma_{s,i}, i >= 1, increasing s
  GenMonomial monomial() const;
};

std::vector<BasisElement> basis(int n, int d);
// Elements u^a prod e prod gamma with a <= n and a < s for every flag.
std::vector<GenMonomial> corollary_basis(int n, int d);

unsigned long partition_p(int n, int m);
unsigned long dim_u(int n, int m);
// |basis| plus the x-multiples of pure e-monomials.
unsigned long weighted_basis_count(int n, int d);

struct MinimalityReport {
  int n = 0;
  std::size_t cardinality = 0;
  std::vector<std::pair<Symbol, bool>> independent;  // generator -> not in the others' subalgebra
  bool u_independent = false;
  bool ok() const;
};
MinimalityReport minimality_certificate(int n);

// rel/n<k>/s<s>i<i>t<t>j<j>.json below a root directory.
class RelationCache {
public:
  explicit RelationCache(std::filesystem::path root) : root_(std::move(root)) {}
  static std::optional<RelationCache> from_env();

  static std::string key(int s, int i, int t, int j, int n);
  std::optional<GeneratorPolynomial> load(int s, int i, int t, int j, int n) const;
  void store(int s, int i, int t, int j, int n, const GeneratorPolynomial& rhs) const;
  const std::filesystem::path& root() const { return root_; }

private:
  std::filesystem::path root_;
};

}  // namespace equichar
