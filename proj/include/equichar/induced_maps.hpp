#pragma once

#include "equichar/presentations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equichar {

enum class MapKind {
  OplusOne,
  OplusSigma,
  OplusTwoSigma,
  WhitneySum,
  TensorLine,
  Conjugation,
  ForgetSpToU,
  QuatUToSp,
  ComplexifySOToU,
  ForgetUToSO
};

std::string map_kind_name(MapKind k);  // e.g. "tensor-line"
MapKind parse_map_kind(const std::string& s);
std::vector<MapKind> all_map_kinds();

// Rank conventions (cohomology runs source -> target):
//   OplusOne, OplusSigma   U/Sp: H(F(n+1)) -> H(F(n)); SO: H(SO(n+1)) -> H(SO(n)), n odd
//   OplusTwoSigma          SO:   H(SO(n+2)) -> H(SO(n))
//   WhitneySum             U/Sp: H(F(n+m)) -> H(F(n)) (x) H(F(m))
//   TensorLine             H(U(1)) -> H(U(1)) (x) H(U(1)), n = 1
//   Conjugation            H(U(n)) -> H(U(n))
//   ForgetSpToU            H(U(2n)) -> H(Sp(n))
//   QuatUToSp              H(Sp(n)) -> H(U(n))
//   ComplexifySOToU        H(U(2n)) -> H(SO(2n))
//   ForgetUToSO            H(SO(2n)) -> H(U(n))
struct MapRequest {
  MapKind kind;
  int n = 1;
  int m = 0;
  Family family = Family::U;  // for the stabilization and sum maps
};

struct MapSetup {
  MapRequest request{MapKind::OplusOne};
  GroupId source{Family::U, 0};
  std::vector<GroupId> target;  // one factor, or two for coproduct-shaped maps
  TorusModel target_model = TorusModel::unitary(0, Ring::A);
  std::vector<Letters> sides;
  SubstitutionMap torus_map = SubstitutionMap::identity(0, Ring::A);
};
MapSetup map_setup(const MapRequest& r);

struct MapImage {
  std::string generator;
  Symbol symbol;
  GeneratorPolynomial image;
  TorusPolynomial torus;
};

struct RingMapResult {
  MapSetup setup;
  std::vector<MapImage> images;                    // source generators in presentation order
  std::map<Symbol, GeneratorPolynomial> symbol_images;  // aliases included
  std::size_t relations_checked = 0;
  std::vector<std::string> relation_failures;
  bool respects_relations() const { return relation_failures.empty(); }
  const MapImage& image(const std::string& generator) const;
};

RingMapResult induced_map(const MapRequest& r, const RelationCache* cache = nullptr, int threads = 1);
RingMapResult conjugation_map(int n);

struct ClosedFormEntry {
  std::string generator;
  bool leading_only = false;
  bool ok = false;
  std::string expected;  // closed formula, as text
  std::string actual;
  std::string diff;      // actual - expected, decomposed; empty when equal
};
struct ClosedFormReport {
  MapRequest request;
  std::vector<ClosedFormEntry> entries;
  bool ok() const;
};
ClosedFormReport verify_closed_form(const MapRequest& r);

// Images of kappa_{s,j} under U(n) -> Sp(n) and of pi_{s,j} under U(n) -> SO(2n) agree.
struct TailReport {
  int n = 0;
  std::vector<std::pair<std::string, bool>> entries;
  bool ok() const;
};
TailReport compare_quaternionic_tails(int n);

// c_i = e_i u - gamma_{i,1} for 1 <= i < n (k_i, kappa in Sp).
std::vector<GeneratorPolynomial> stable_classes(int n, Family family = Family::U);

struct StableEntry {
  int i = 0;
  std::string text;
  bool fixed_oplus_one = false;
  bool fixed_oplus_sigma = false;
};
struct StableReport {
  Family family = Family::U;
  int n = 0;
  std::vector<StableEntry> entries;
  bool ok() const;
};
StableReport verify_stable_classes(int n, Family family = Family::U);

// U(2n) -> Sp(n) on c_1..c_{2n-1} against c_{2s} -> (-1)^s kbar_s, c_{2s+1} -> 0.
struct ForgetStableEntry {
  int i = 0;
  std::string expected;
  std::string actual;
  bool ok = false;
};
struct ForgetStableReport {
  int n = 0;
  std::vector<ForgetStableEntry> entries;
  bool ok() const;
};
ForgetStableReport forget_stable_classes(int n);

// Independence of the monomials in e_1..e_n, c_1..c_{n-1} (plus x times pure e-monomials) in H(U(n)), per degree.
struct ConjectureDegree {
  int degree = 0;
  std::size_t products = 0;
  std::size_t rank = 0;
  bool independent() const { return products == rank; }
};
std::vector<ConjectureDegree> conjecture_evidence(int n, int max_degree);

}  // namespace equichar
