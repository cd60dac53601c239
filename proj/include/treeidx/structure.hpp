// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "treeidx/tree.hpp"

namespace treeidx {

/// Spine of a caterpillar in path order, or nullopt if removing all leaves
/// does not leave a path. Of the two orientations the one whose degree tuple
/// is lexicographically smaller wins; ties fall back to the label sequence.
/// P2 has an empty spine; the single vertex is its own spine.
inline std::optional<std::vector<Vertex>> caterpillar_spine(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v)
    if (!t.is_leaf(v)) inner.push_back(v);
  if (inner.empty()) return std::vector<Vertex>{};

  // Degree of each inner vertex within the inner subtree.
  std::vector<std::size_t> inner_degree(n, 0);
  for (Vertex v : inner)
    for (Vertex w : t.neighbors(v))
      if (!t.is_leaf(w)) ++inner_degree[v];

  for (Vertex v : inner)
    if (inner_degree[v] > 2) return std::nullopt;

  // Walk from the smallest-labelled endpoint.
  Vertex start = inner.front();
  for (Vertex v : inner)
    if (inner_degree[v] <= 1) {
      start = v;
      break;
    }

  std::vector<Vertex> spine{start};
  Vertex prev = start;
  Vertex cur = start;
  while (spine.size() < inner.size()) {
    Vertex next = cur;
    for (Vertex w : t.neighbors(cur))
      if (!t.is_leaf(w) && w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
    spine.push_back(cur);
  }

  std::vector<Vertex> reversed(spine.rbegin(), spine.rend());
  auto degrees_of = [&](const std::vector<Vertex>& path) {
    std::vector<std::size_t> d;
    d.reserve(path.size());
    for (Vertex v : path) d.push_back(t.degree(v));
    return d;
  };
  const auto forward = degrees_of(spine);
  const auto backward = degrees_of(reversed);
  if (backward < forward || (backward == forward && reversed < spine)) return reversed;
  return spine;
}

inline bool is_caterpillar(const Tree& t) { return caterpillar_spine(t).has_value(); }

struct SupportVertex {
  Vertex vertex;
  std::size_t pendants;

  bool strong() const noexcept { return pendants >= 2; }
  friend bool operator==(const SupportVertex&, const SupportVertex&) = default;
};

/// Vertices adjacent to at least one leaf, in increasing label order.
inline std::vector<SupportVertex> support_vertices(const Tree& t) {
  std::vector<SupportVertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    std::size_t pendants = 0;
    for (Vertex w : t.neighbors(v))
      if (t.is_leaf(w)) ++pendants;
    // In P2 each endpoint is a leaf adjacent to a leaf.
    if (pendants > 0) out.push_back({v, pendants});
  }
  return out;
}

inline bool is_star(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) return true;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == n - 1) return true;
  return false;
}

inline bool is_path(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) > 2) return false;
  return true;
}

}  // namespace treeidx
