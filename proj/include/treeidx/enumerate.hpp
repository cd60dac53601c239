// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "treeidx/canonical.hpp"
#include "treeidx/error.hpp"
#include "treeidx/families.hpp"
#include "treeidx/prufer.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

enum class Isomorphism { Labeled, NonIsomorphic };

/// Exhaustive enumeration stops at `cap` vertices. The default keeps labeled
/// scans around five million decodes; forcing raises it to the hard limit.
struct EnumerationLimits {
  static constexpr std::size_t default_cap = 9;
  static constexpr std::size_t hard_cap = 10;

  std::size_t cap = default_cap;

  static EnumerationLimits forced() { return {hard_cap}; }
};

inline void check_cap(std::size_t n, const EnumerationLimits& limits) {
  const std::size_t cap = std::min(limits.cap, EnumerationLimits::hard_cap);
  if (n > cap)
    throw Error(Errc::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(cap));
}

inline Tree single_vertex() { return Tree::from_edges(1, {}); }

/// n^(n-2) for n >= 2, and 1 for the single vertex.
inline std::uint64_t labeled_count(std::size_t n) {
  if (n < 2) return 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) count *= n;
  return count;
}

/// The rank-th code in lexicographic order (base-n digits, most significant first).
inline PruferCode code_at_rank(std::size_t n, std::uint64_t rank) {
  PruferCode c{n, std::vector<Vertex>(n >= 2 ? n - 2 : 0, 0)};
  for (std::size_t i = c.code.size(); i-- > 0;) {
    c.code[i] = static_cast<Vertex>(rank % n);
    rank /= n;
  }
  return c;
}

/// Advances to the lexicographic successor; false after the last code.
inline bool next_code(std::vector<Vertex>& code, std::size_t n) {
  for (std::size_t i = code.size(); i-- > 0;) {
    if (++code[i] < n) return true;
    code[i] = 0;
  }
  return false;
}

namespace detail {

/// Calls f(code, tree) for codes of rank [first, last).
template <class F>
void for_each_code_in_range(std::size_t n, std::uint64_t first, std::uint64_t last, F&& f) {
  if (first >= last) return;
  PruferCode c = code_at_rank(n, first);
  std::vector<Edge> edges;
  std::vector<std::uint32_t> scratch;
  for (std::uint64_t rank = first; rank < last; ++rank) {
    detail::prufer_decode_edges(n, c.code, edges, scratch);
    f(c, Tree::from_edges(n, edges));
    next_code(c.code, n);
  }
}

/// Splits [0, total) into `parts` contiguous ranges and runs body(first, last, part)
/// on its own thread per part (inline when parts == 1).
template <class Body>
void run_partitioned(std::uint64_t total, std::size_t parts, Body&& body) {
  parts = std::max<std::size_t>(1, std::min<std::uint64_t>(parts, std::max<std::uint64_t>(total, 1)));
  auto bound = [&](std::size_t i) { return total * i / parts; };
  if (parts == 1) {
    body(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i)
    workers.emplace_back([&, i] { body(bound(i), bound(i + 1), i); });
  for (auto& w : workers) w.join();
}

}  // namespace detail

/// Every labeled tree on n vertices, in lexicographic Prüfer-code order.
template <class F>
void for_each_labeled(std::size_t n, F&& f, const EnumerationLimits& limits = {}) {
  if (n == 0) throw Error(Errc::InvalidOrder, "n must be at least 1");
  check_cap(n, limits);
  if (n == 1) {
    f(single_vertex());
    return;
  }
  detail::for_each_code_in_range(n, 0, labeled_count(n), [&](const PruferCode&, const Tree& t) { f(t); });
}

/// One isomorphism class of trees on n vertices.
struct TreeClass {
  CanonicalKey key;
  Tree tree;                   ///< decode of `witness`
  PruferCode witness;          ///< lexicographically smallest code in the class
  std::uint64_t labeled_count; ///< labeled trees in the class
};

/// All isomorphism classes of order n, sorted by canonical key. Built by
/// decoding every Prüfer code; `jobs` workers each take a contiguous code range.
inline std::vector<TreeClass> census(std::size_t n, std::size_t jobs = 1, const EnumerationLimits& limits = {}) {
  if (n == 0) throw Error(Errc::InvalidOrder, "n must be at least 1");
  check_cap(n, limits);
  if (n == 1) {
    const Tree t = single_vertex();
    return {TreeClass{canonical_key(t), t, PruferCode{1, {}}, 1}};
  }

  struct Tally {
    std::uint64_t first_rank;
    std::uint64_t count;
  };
  using Partial = std::map<CanonicalKey, Tally>;
  const std::uint64_t total = labeled_count(n);
  std::vector<Partial> partials(std::max<std::size_t>(jobs, 1));
  detail::run_partitioned(total, jobs, [&](std::uint64_t first, std::uint64_t last, std::size_t part) {
    auto& local = partials[part];
    std::uint64_t rank = first;
    detail::for_each_code_in_range(n, first, last, [&](const PruferCode&, const Tree& t) {
      auto [it, inserted] = local.try_emplace(canonical_key(t), Tally{rank, 0});
      ++it->second.count;
      ++rank;
    });
  });

  Partial merged;
  for (auto& part : partials)
    for (auto& [key, tally] : part) {
      auto [it, inserted] = merged.try_emplace(key, tally);
      if (!inserted) {
        it->second.first_rank = std::min(it->second.first_rank, tally.first_rank);
        it->second.count += tally.count;
      }
    }

  std::vector<TreeClass> out;
  out.reserve(merged.size());
  for (auto& [key, tally] : merged) {
    PruferCode witness = code_at_rank(n, tally.first_rank);
    Tree t = prufer_decode(witness);
    out.push_back(TreeClass{key, std::move(t), std::move(witness), tally.count});
  }
  return out;
}

/// Memoizes census() per order; safe to share between threads.
class CensusCache {
 public:
  explicit CensusCache(std::size_t jobs = 1, EnumerationLimits limits = {}) : jobs_(jobs), limits_(limits) {}

  const std::vector<TreeClass>& get(std::size_t n) {
    check_cap(n, limits_);
    std::shared_ptr<Entry> entry;
    {
      std::lock_guard lock(mutex_);
      auto& slot = entries_[n];
      if (!slot) slot = std::make_shared<Entry>();
      entry = slot;
    }
    std::call_once(entry->once, [&] { entry->classes = census(n, jobs_, limits_); });
    return entry->classes;
  }

  const EnumerationLimits& limits() const noexcept { return limits_; }

 private:
  struct Entry {
    std::once_flag once;
    std::vector<TreeClass> classes;
  };
  std::size_t jobs_;
  EnumerationLimits limits_;
  std::mutex mutex_;
  std::map<std::size_t, std::shared_ptr<Entry>> entries_;
};

/// One representative per isomorphism class, sorted by canonical key.
inline std::vector<Tree> enumerate_nonisomorphic(std::size_t n, const EnumerationLimits& limits = {}) {
  std::vector<Tree> out;
  for (auto& c : census(n, 1, limits)) out.push_back(std::move(c.tree));
  return out;
}

/// Labeled trees where label v has degree degree_of_label[v]: the decodes of
/// every arrangement of the multiset {v repeated d_v - 1 times}, in
/// lexicographic code order. There are (n-2)!/prod (d_v - 1)! of them.
template <class F>
void for_each_with_degree_assignment(std::span<const std::size_t> degree_of_label, F&& f,
                                     const EnumerationLimits& limits = {}) {
  const std::size_t n = degree_of_label.size();
  if (!DegreeSequence(std::vector<std::size_t>(degree_of_label.begin(), degree_of_label.end())).is_tree_realizable())
    throw Error(Errc::NotRealizable, "degree assignment is not realizable by a tree");
  check_cap(n, limits);
  if (n == 1) {
    f(single_vertex());
    return;
  }
  std::vector<Vertex> code;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 1; i < degree_of_label[v]; ++i) code.push_back(v);
  std::vector<Edge> edges;
  std::vector<std::uint32_t> scratch;
  do {
    detail::prufer_decode_edges(n, code, edges, scratch);
    f(Tree::from_edges(n, edges));
  } while (std::next_permutation(code.begin(), code.end()));
}

/// All labeled trees whose degree multiset is `ds`: every distinct assignment
/// of the multiset to labels (lexicographic), then every code for it.
template <class F>
void for_each_with_degree_sequence(const DegreeSequence& ds, F&& f, const EnumerationLimits& limits = {}) {
  if (!ds.is_tree_realizable()) throw Error(Errc::NotRealizable, "degree sequence is not realizable by a tree");
  check_cap(ds.size(), limits);
  std::vector<std::size_t> assignment(ds.values().begin(), ds.values().end());
  do {
    for_each_with_degree_assignment(assignment, f, limits);
  } while (std::next_permutation(assignment.begin(), assignment.end()));
}

inline std::vector<Tree> enumerate_with_degree_sequence(const DegreeSequence& ds, Isomorphism iso,
                                                        const EnumerationLimits& limits = {}) {
  std::vector<Tree> out;
  if (iso == Isomorphism::Labeled) {
    for_each_with_degree_sequence(ds, [&](const Tree& t) { out.push_back(t); }, limits);
    return out;
  }
  std::map<CanonicalKey, Tree> seen;
  for_each_with_degree_sequence(ds, [&](const Tree& t) { seen.try_emplace(canonical_key(t), t); }, limits);
  for (auto& [key, t] : seen) out.push_back(std::move(t));
  return out;
}

inline std::size_t max_degree(const Tree& t) {
  std::size_t best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return best;
}

/// Non-isomorphic trees of order n whose maximum degree is exactly delta_max.
inline std::vector<Tree> class_n_delta(std::size_t n, std::size_t delta_max, const EnumerationLimits& limits = {}) {
  std::vector<Tree> out;
  for (auto& c : census(n, 1, limits))
    if (max_degree(c.tree) == delta_max) out.push_back(std::move(c.tree));
  if (out.empty())
    throw Error(Errc::EmptyClass, "no tree of order " + std::to_string(n) + " has maximum degree " +
                                      std::to_string(delta_max));
  return out;
}

struct Arrangement {
  std::vector<std::size_t> spine;
  Tree tree;
};

/// Every ordering of the spine degrees up to reversal, each exactly once; the
/// emitted ordering is the lexicographically smaller of itself and its reversal.
inline std::vector<Arrangement> caterpillar_arrangements(std::vector<std::size_t> spine_degrees) {
  if (spine_degrees.size() < 2)
    throw Error(Errc::InvalidFamilySpec, "arrangements need a spine of at least two vertices");
  for (std::size_t d : spine_degrees)
    if (d < 2) throw Error(Errc::InvalidFamilySpec, "spine degrees must be at least 2");
  std::sort(spine_degrees.begin(), spine_degrees.end());
  std::vector<Arrangement> out;
  do {
    const std::vector<std::size_t> reversed(spine_degrees.rbegin(), spine_degrees.rend());
    if (spine_degrees <= reversed) out.push_back({spine_degrees, make_family(CaterpillarSpec{spine_degrees})});
  } while (std::next_permutation(spine_degrees.begin(), spine_degrees.end()));
  return out;
}

namespace detail {

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

inline PruferCode random_prufer(std::size_t n, std::mt19937_64& rng) {
  PruferCode c{n, std::vector<Vertex>(n - 2)};
  for (auto& v : c.code) v = static_cast<Vertex>(detail::uniform_below(rng, n));
  return c;
}

/// Uniform over labeled trees via a uniform code; deterministic in (n, seed).
inline Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::InvalidOrder, "random trees need n >= 2");
  std::mt19937_64 rng(seed);
  return prufer_decode(random_prufer(n, rng));
}

}  // namespace treeidx
