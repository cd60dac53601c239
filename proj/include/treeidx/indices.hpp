// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "treeidx/error.hpp"
#include "treeidx/numeric.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

// Degree-based topological indices. Every value is an exact non-negative
// integer; on the single vertex and on P2 the irregularity measures are 0.

inline Integer imbalance(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_edge(u, v))
    throw Error(Errc::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  const auto du = t.degree(u), dv = t.degree(v);
  return Integer(du > dv ? du - dv : dv - du);
}

/// Albertson irregularity: sum over edges of |d_u - d_v|.
inline Integer albertson(const Tree& t) {
  Integer sum = 0;
  for (const auto& [u, v] : t.edges()) {
    const auto du = t.degree(u), dv = t.degree(v);
    sum += du > dv ? du - dv : dv - du;
  }
  return sum;
}

/// Sum of |d_u - d_v| over all unordered vertex pairs. With degrees sorted
/// ascending, d_i contributes i*d_i - (d_0 + ... + d_{i-1}).
inline Integer total_irregularity(const Tree& t) {
  std::vector<std::size_t> d(t.order());
  for (Vertex v = 0; v < t.order(); ++v) d[v] = t.degree(v);
  std::sort(d.begin(), d.end());
  Integer sum = 0;
  Integer prefix = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += Integer(i) * d[i] - prefix;
    prefix += d[i];
  }
  return sum;
}

inline Integer first_zagreb(const Tree& t) {
  Integer sum = 0;
  for (Vertex v = 0; v < t.order(); ++v) sum += Integer(t.degree(v)) * t.degree(v);
  return sum;
}

/// The edge-side form, sum over edges of (d_u + d_v).
inline Integer first_zagreb_edge_side(const Tree& t) {
  Integer sum = 0;
  for (const auto& [u, v] : t.edges()) sum += t.degree(u) + t.degree(v);
  return sum;
}

inline Integer second_zagreb(const Tree& t) {
  Integer sum = 0;
  for (const auto& [u, v] : t.edges()) sum += Integer(t.degree(u)) * t.degree(v);
  return sum;
}

/// Forgotten index computed vertex-side as sum of d_v^3.
inline Integer forgotten(const Tree& t) {
  Integer sum = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    const Integer d = t.degree(v);
    sum += d * d * d;
  }
  return sum;
}

/// Sum over edges of (d_u^2 + d_v^2); must agree with forgotten().
inline Integer forgotten_edge_side(const Tree& t) {
  Integer sum = 0;
  for (const auto& [u, v] : t.edges()) {
    const Integer du = t.degree(u), dv = t.degree(v);
    sum += du * du + dv * dv;
  }
  return sum;
}

inline Integer sigma(const Tree& t) {
  Integer sum = 0;
  for (const auto& [u, v] : t.edges()) {
    const Integer diff = Integer(t.degree(u)) - Integer(t.degree(v));
    sum += diff * diff;
  }
  return sum;
}

struct IndexValues {
  Integer irr;
  Integer irr_total;
  Integer m1;
  Integer m2;
  Integer forgotten;
  Integer sigma;
};

inline IndexValues compute_indices(const Tree& t) {
  return {albertson(t), total_irregularity(t), first_zagreb(t), second_zagreb(t), forgotten(t), sigma(t)};
}

}  // namespace treeidx
