// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "treeidx/tree.hpp"

namespace treeidx {

/// Relabeling-invariant byte string; equal keys <=> isomorphic trees.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// One or two vertices of minimum eccentricity, found by stripping leaves
/// layer by layer. Returned in increasing label order.
inline std::vector<Vertex> center(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : t.neighbors(leaf))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace detail {

// Rooted level encoding: a vertex is "(" + its children's encodings in
// sorted order + ")". Iterative so deep paths do not recurse.
inline std::string rooted_encoding(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (Vertex w : t.neighbors(v))
      if (parent[w] == n) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> children(n);
  std::string enc;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end());
    enc.clear();
    enc.push_back('(');
    for (const auto& k : kids) enc += k;
    enc.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) return enc;
    children[parent[v]].push_back(enc);
  }
  return enc;
}

}  // namespace detail

inline CanonicalKey canonical_key(const Tree& t) {
  const auto c = center(t);
  std::string best = detail::rooted_encoding(t, c.front());
  if (c.size() == 2) best = std::min(best, detail::rooted_encoding(t, c.back()));
  return CanonicalKey{std::move(best)};
}

}  // namespace treeidx
