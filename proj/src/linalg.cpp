#include "equichar/linalg.hpp"

namespace equichar {

SparseVector RowReducer::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    long col = it->first;
    for (auto& [c, val] : row->second) {
      Rational& slot = v[c];
      slot -= f * val;
    }
    for (auto jt = v.begin(); jt != v.end();) {
      if (sgn(jt->second) == 0) jt = v.erase(jt);
      else ++jt;
    }
    it = v.upper_bound(col);
  }
  return v;
}

bool RowReducer::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.begin()->second;
  for (auto& [c, val] : r) val /= lead;
  long pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool RowReducer::in_span(const SparseVector& v) const {
  return reduce(v).empty();
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& vectors,
                                                       const SparseVector& target) {
  // Gauss-Jordan on (vector | identity), identity columns ordered last.
  auto key = [](long c) { return c >= 0 ? c : (long(1) << 40) - c; };
  std::map<long, SparseVector> piv;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    SparseVector v;
    for (auto& [c, val] : vectors[k])
      if (sgn(val) != 0) v[key(c)] = val;
    v[key(-1 - long(k))] = 1;
    for (auto& [p, row] : piv) {
      auto f = v.find(p);
      if (f == v.end()) continue;
      Rational m = f->second;
      for (auto& [c, val] : row) v[c] -= m * val;
      for (auto it = v.begin(); it != v.end();) {
        if (sgn(it->second) == 0) it = v.erase(it);
        else ++it;
      }
    }
    if (v.empty()) continue;
    long p = v.begin()->first;
    Rational lead = v.begin()->second;
    for (auto& [c, val] : v) val /= lead;
    for (auto& [q, row] : piv) {
      auto f = row.find(p);
      if (f == row.end()) continue;
      Rational m = f->second;
      for (auto& [c, val] : v) row[c] -= m * val;
      for (auto it = row.begin(); it != row.end();) {
        if (sgn(it->second) == 0) it = row.erase(it);
        else ++it;
      }
    }
    piv.emplace(p, std::move(v));
  }
  SparseVector t;
  for (auto& [c, val] : target)
    if (sgn(val) != 0) t[key(c)] = val;
  for (auto& [p, row] : piv) {
    auto f = t.find(p);
    if (f == t.end()) continue;
    Rational m = f->second;
    for (auto& [c, val] : row) t[c] -= m * val;
    for (auto it = t.begin(); it != t.end();) {
      if (sgn(it->second) == 0) it = t.erase(it);
      else ++it;
    }
  }
  const long marker = long(1) << 40;
  std::vector<Rational> coeffs(vectors.size());
  for (auto& [c, val] : t) {
    if (c < marker) return std::nullopt;
    coeffs[std::size_t(c - marker - 1)] = -val;
  }
  return coeffs;
}

long MonomialIndex::index(const Monomial& m, bool xpart) {
  auto [it, fresh] = ids_.try_emplace({m, xpart}, long(ids_.size()));
  return it->second;
}

SparseVector MonomialIndex::vectorize(const TorusPolynomial& p) {
  SparseVector v;
  for (auto& [m, c] : p.terms()) {
    if (sgn(c.yside()) != 0) v[index(m, false)] = c.yside();
    if (p.ring() == Ring::A && !m.has_u()) {
      Rational xs = c.xside();
      if (sgn(xs) != 0) v[index(m, true)] = xs;
    }
  }
  return v;
}

}  // namespace equichar
