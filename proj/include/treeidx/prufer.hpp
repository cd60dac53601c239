// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "treeidx/error.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

/// Length n-2 label sequence in bijection with labeled trees on n >= 2 vertices.
struct PruferCode {
  std::size_t n = 2;
  std::vector<Vertex> code;

  friend auto operator<=>(const PruferCode&, const PruferCode&) = default;
  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

inline void validate(const PruferCode& c) {
  if (c.n < 2) throw Error(Errc::InvalidOrder, "Prufer codes describe trees with n >= 2");
  if (c.code.size() != c.n - 2)
    throw Error(Errc::InvalidOrder, "code length " + std::to_string(c.code.size()) + " does not match n-2 = " +
                                        std::to_string(c.n - 2));
  for (Vertex v : c.code)
    if (v >= c.n) throw Error(Errc::InvalidLabel, "code entry " + std::to_string(v) + " outside [0, n)");
}

namespace detail {

// Linear-time decode: keep a pointer to the smallest leaf and follow the
// chain when attaching a leaf turns its neighbour into a smaller leaf.
inline void prufer_decode_edges(std::size_t n, std::span<const Vertex> code, std::vector<Edge>& edges,
                                std::vector<std::uint32_t>& remaining) {
  edges.clear();
  remaining.assign(n, 1);
  for (Vertex v : code) ++remaining[v];

  Vertex ptr = 0;
  while (remaining[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : code) {
    edges.emplace_back(leaf, v);
    --remaining[leaf];
    if (--remaining[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (remaining[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // The last leaf joins vertex n-1, which is never removed.
  edges.emplace_back(leaf, static_cast<Vertex>(n - 1));
}

}  // namespace detail

inline Tree prufer_decode(const PruferCode& c) {
  validate(c);
  std::vector<Edge> edges;
  std::vector<std::uint32_t> remaining;
  detail::prufer_decode_edges(c.n, c.code, edges, remaining);
  return Tree::from_edges(c.n, edges);
}

inline PruferCode prufer_encode(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(Errc::InvalidOrder, "Prufer codes describe trees with n >= 2");

  std::vector<std::uint32_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<std::uint32_t>(t.degree(v));
  std::vector<bool> removed(n, false);

  auto live_neighbor = [&](Vertex v) {
    for (Vertex w : t.neighbors(v))
      if (!removed[w]) return w;
    return v;
  };

  PruferCode out{n, {}};
  out.code.reserve(n - 2);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    const Vertex next = live_neighbor(leaf);
    out.code.push_back(next);
    removed[leaf] = true;
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (removed[ptr] || degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return out;
}

}  // namespace treeidx
