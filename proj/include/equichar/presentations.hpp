#pragma once

#include "equichar/core_poly.hpp"
#include "equichar/symmetric_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equichar {

enum class Family { U, Sp, SO, O, SU };

// SO and O ranks are matrix sizes; U, Sp, SU ranks are complex/quaternionic dimensions.
struct GroupId {
  Family family;
  int rank;
  auto operator<=>(const GroupId&) const = default;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string group_name(const GroupId& g);

struct Generator {
  std::string name;
  Symbol symbol;
  int degree;  // cohomological
  TorusPolynomial torus_image;
};

// lhs = rhs, checked through the torus realization.
struct PresentationRelation {
  std::string text;
  GeneratorPolynomial lhs;
  GeneratorPolynomial rhs;
  bool quotient = false;  // imposed on the torus model rather than holding in it
};

struct Presentation {
  GroupId group;
  Ring ring = Ring::A;
  TorusModel model = TorusModel::unitary(0, Ring::A);
  GroupKind weyl_kind = GroupKind::SigmaN;
  int weyl_rank = 0;
  int torus_rank = 0;
  Letters letters = Letters::U;
  std::vector<Generator> generators;
  std::vector<PresentationRelation> relations;
  std::vector<std::pair<std::string, std::string>> restriction;  // generator or constant -> underlying image
  bool relations_complete = true;
  // Extra relations of a quotient of the model ring (O(2), O(4)); each is zero.
  std::vector<GeneratorPolynomial> quotient;
  // Torus images of every symbol that can occur, aliases included.
  std::map<Symbol, TorusPolynomial> images;

  const Generator& generator(const std::string& name) const;
  std::vector<Letters> sides() const { return {letters}; }
  GroupAction weyl() const { return GroupAction(weyl_kind, weyl_rank); }
};

TorusPolynomial evaluate(const Presentation& p, const GeneratorPolynomial& f);

// Torus model and letters of a group without building its relations. Not for SU or even O.
TorusModel torus_model(const GroupId& g);
Letters letters_for(Family f);

// Relations are materialized through the cache when one is given.
Presentation presentation(const GroupId& g, const RelationCache* cache = nullptr, int threads = 1);

std::map<std::string, TorusPolynomial> torus_realization(const GroupId& g);

struct RestrictionData {
  std::vector<std::pair<std::string, std::string>> res;
  std::vector<std::pair<std::string, std::string>> section;  // nonequivariant generator -> equivariant lift
  bool split = false;                          // res(section(c)) == c for every listed c
  bool tr_res_is_x = false;                    // Tr(Res(b)) == x b on every generator
};
RestrictionData restriction(const GroupId& g);

// Underlying nonequivariant image of a torus polynomial: x -> 2, y -> 0, u_i -> 0.
TorusPolynomial res_torus(const TorusPolynomial& p);
// Tr(a) = x b with Res(b) = a.
TorusPolynomial tr_torus(const TorusPolynomial& a);

struct RelationReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// Every relation of the presentation holds after torus expansion.
RelationReport verify_relations(const Presentation& p);
// Every generator image is invariant under the Weyl group.
bool verify_invariance(const Presentation& p);

struct DimensionPair {
  unsigned long presentation = 0;
  unsigned long oracle = 0;
  std::optional<unsigned long> formula;  // dim_u for U
  bool agree() const { return presentation == oracle && (!formula || *formula == oracle); }
};
// m is the torus degree: cohomological degree 2m.
DimensionPair graded_dimensions(const GroupId& g, int m);
unsigned long graded_dimension(const GroupId& g, int m);  // throws on disagreement

struct SuReport {
  int n = 0;
  bool e1_vanishes = false;
  bool top_gamma_vanishes = false;  // gamma_{1,n-1}
  std::optional<bool> u_squared_is_2u;
  std::optional<bool> sp1_ring_map;              // e2 -> k1, u -> 2u
  std::optional<bool> sp1_torus_ring_map;        // e2 -> -k1, u -> 2u
  std::optional<std::string> e2_torus_image;     // in Sp(1) generators
  bool ok() const;
};
SuReport su_check(int n);
// Torus substitution realizing the SU(n) maximal torus inside U(n).
SubstitutionMap su_substitution(int n);

}  // namespace equichar
