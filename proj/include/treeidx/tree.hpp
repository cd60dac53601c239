// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeidx/error.hpp"

namespace treeidx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable finite tree on the vertex labels [0, n).
 *
 * Adjacency is stored in compressed rows with each row sorted, so two trees
 * compare equal exactly when they have the same labeled edge set. The only
 * way to obtain a Tree is through from_edges(), which validates the input.
 */
class Tree {
 public:
  /// Single-vertex tree; keeps default construction meaningful.
  Tree() : offsets_{0, 0} {}

  static Tree from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw Error(Errc::InvalidOrder, "a tree needs at least one vertex");
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(Errc::InvalidLabel, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") uses a label outside [0, " + std::to_string(n) + ")");
      if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    std::vector<Edge> normalized(edges.begin(), edges.end());
    for (auto& e : normalized)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(normalized.begin(), normalized.end());
    if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end())
      throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(dup->first) + "," +
                                           std::to_string(dup->second) + ") listed twice");
    if (normalized.size() != n - 1)
      throw Error(Errc::CycleOrDisconnected, "a tree on " + std::to_string(n) + " vertices has " +
                                                 std::to_string(n - 1) + " edges, got " +
                                                 std::to_string(normalized.size()));

    // n-1 edges and no cycle <=> connected.
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, v] : normalized) {
      const Vertex ru = find(u), rv = find(v);
      if (ru == rv) throw Error(Errc::CycleOrDisconnected, "edge set contains a cycle");
      parent[ru] = rv;
    }
    return Tree(n, normalized);
  }

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool is_leaf(Vertex v) const noexcept { return degree(v) == 1; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= order() || v >= order()) return false;
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Tree with vertex v renamed to perm[v]; perm must be a permutation of [0, n).
  Tree relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> renamed;
    renamed.reserve(edge_count());
    for (const auto& [u, v] : edges()) renamed.emplace_back(perm[u], perm[v]);
    return from_edges(order(), renamed);
  }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Tree(std::size_t n, std::span<const Edge> sorted_edges) : offsets_(n + 1, 0) {
    for (const auto& [u, v] : sorted_edges) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    neighbors_.resize(2 * sorted_edges.size());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : sorted_edges) {
      neighbors_[fill[u]++] = v;
      neighbors_[fill[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v)
      std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
  }

  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/**
 * Degree multiset stored in non-decreasing order, d_1 <= ... <= d_n.
 *
 * Any sequence of non-negative integers may be held; the realizability
 * predicates say whether some tree (or some simple graph) has it.
 */
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end());
  }

  std::span<const std::size_t> values() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  std::size_t min() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }
  std::size_t max() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }
  std::size_t sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
  }

  /// (0) for the single vertex; otherwise all positive with sum 2(n-1).
  bool is_tree_realizable() const noexcept {
    if (degrees_.size() == 1) return degrees_[0] == 0;
    if (degrees_.size() < 2) return false;
    return degrees_.front() >= 1 && sum() == 2 * (degrees_.size() - 1);
  }

  /// Erdős–Gallai: with degrees sorted non-increasingly, for every k
  /// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i), and the total is even.
  bool is_graphic() const noexcept {
    if (sum() % 2 != 0) return false;
    const std::size_t n = degrees_.size();
    std::vector<std::size_t> desc(degrees_.rbegin(), degrees_.rend());
    std::size_t prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      prefix += desc[k - 1];
      std::size_t tail = 0;
      for (std::size_t i = k; i < n; ++i) tail += std::min(k, desc[i]);
      if (prefix > k * (k - 1) + tail) return false;
    }
    return true;
  }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::size_t> degrees_;
};

inline DegreeSequence degree_sequence(const Tree& t) {
  std::vector<std::size_t> degrees(t.order());
  for (Vertex v = 0; v < t.order(); ++v) degrees[v] = t.degree(v);
  return DegreeSequence(std::move(degrees));
}

}  // namespace treeidx
