#pragma once

// Test-side reference computations, written without the library's algorithms.

#include "equichar/core_poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using equichar::Monomial;
using equichar::Ring;
using equichar::TorusPolynomial;

// All (a, eps) in n pairs with sum a = d.
inline std::vector<Monomial> monomials(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      a[k] = left;
      for (unsigned e = 0; e < (1u << n); ++e) {
        Monomial m;
        for (int i = 0; i < n; ++i) {
          m.a[i] = uint8_t(a[i]);
          m.set_u(i, e >> i & 1u);
        }
        out.push_back(m);
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[k] = v;
      rec(k + 1, left - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(0, d);
  return out;
}

// Sigma_n orbit representative: the sorted list of (a_i, eps_i).
inline std::vector<std::pair<int, int>> orbit_key(const Monomial& m, int n) {
  std::vector<std::pair<int, int>> k;
  for (int i = 0; i < n; ++i) k.push_back({m.a[i], m.u(i) ? 1 : 0});
  std::sort(k.begin(), k.end());
  return k;
}

enum class Signs { None, All, Even };

// Dimension of the invariants of Sigma_n extended by the given sign changes, counted over Q.
// Over A every u-free orbit contributes twice (1 and x).
inline std::size_t invariant_count(int n, int d, Signs signs, Ring ring) {
  std::set<std::vector<std::pair<int, int>>> orbits;
  for (const auto& m : monomials(n, d)) {
    bool all_even = true, all_odd = true;
    for (int i = 0; i < n; ++i) (m.a[i] % 2 ? all_even : all_odd) = false;
    if (signs == Signs::All && !all_even) continue;
    if (signs == Signs::Even && !(all_even || all_odd)) continue;
    orbits.insert(orbit_key(m, n));
  }
  std::size_t count = orbits.size();
  if (ring == Ring::A)
    for (const auto& k : orbits)
      if (std::all_of(k.begin(), k.end(), [](auto p) { return p.second == 0; })) ++count;
  return count;
}

// gamma_{s,i}: sum over maps {1..n} -> {w, u, none} with s w's and i u's.
inline TorusPolynomial gamma(int s, int i, int n, Ring ring = Ring::Q) {
  TorusPolynomial p(n, ring);
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    Monomial m;
    int c = code, ws = 0, us = 0;
    for (int k = 0; k < n; ++k, c /= 3) {
      if (c % 3 == 1) m.a[k] = 1, ++ws;
      if (c % 3 == 2) m.set_u(k, true), ++us;
    }
    if (ws == s && us == i) p.add_term(m, 1);
  }
  return p;
}

// Number of monomials in generators of the given degrees with total degree d.
inline std::size_t weighted_monomials(const std::vector<int>& degrees, int d) {
  std::vector<std::size_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int g : degrees)
    for (int v = g; v <= d; ++v) ways[v] += ways[v - g];
  return ways[d];
}

}  // namespace oracle
