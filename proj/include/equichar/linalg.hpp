#pragma once

#include "equichar/core_poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace equichar {

using SparseVector = std::map<long, Rational>;

// Incremental row echelon form over Q.
class RowReducer {
public:
  // Returns true if v was independent of the rows already added.
  bool add(const SparseVector& v);
  bool in_span(const SparseVector& v) const;
  std::size_t rank() const { return rows_.size(); }

private:
  SparseVector reduce(SparseVector v) const;
  std::map<long, SparseVector> rows_;  // pivot column -> row with leading 1
};

// Coefficients c with sum c_k vectors[k] == target, if any.
std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target);

// Coordinates of a torus polynomial in a shared monomial index.
class MonomialIndex {
public:
  long index(const Monomial& m, bool xpart = false);
  SparseVector vectorize(const TorusPolynomial& p);

private:
  std::map<std::pair<Monomial, bool>, long> ids_;
};

}  // namespace equichar
