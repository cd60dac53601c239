// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treeidx/error.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

struct StarSpec {
  std::size_t n;
};
struct PathSpec {
  std::size_t n;
};
/// k >= 3 legs, each a path of the given length (edges), glued at a center.
struct StarlikeSpec {
  std::vector<std::size_t> legs;
};
/// Spine v_1..v_k with the given degrees; pendants fill each vertex up.
struct CaterpillarSpec {
  std::vector<std::size_t> spine;
};
/// Two adjacent hubs carrying a and b pendants.
struct DoubleStarSpec {
  std::size_t a;
  std::size_t b;
};

using FamilySpec = std::variant<StarSpec, PathSpec, StarlikeSpec, CaterpillarSpec, DoubleStarSpec>;

namespace detail {

inline std::vector<std::size_t> parse_number_list(std::string_view text, std::string_view context) {
  std::vector<std::size_t> out;
  if (text.empty()) throw Error(Errc::InvalidFamilySpec, std::string(context) + ": missing parameters");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw Error(Errc::InvalidFamilySpec, std::string(context) + ": bad number '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string join_numbers(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Grammar: "star:7", "path:9", "starlike:3,2,2", "caterpillar:4,3,5", "doublestar:2,2".
inline FamilySpec parse_family_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::InvalidFamilySpec, "expected <family>:<parameters>, got '" + std::string(text) + "'");
  const auto name = text.substr(0, colon);
  const auto values = detail::parse_number_list(text.substr(colon + 1), name);
  auto single = [&]() {
    if (values.size() != 1) throw Error(Errc::InvalidFamilySpec, std::string(name) + " takes one parameter");
    return values[0];
  };
  if (name == "star") return StarSpec{single()};
  if (name == "path") return PathSpec{single()};
  if (name == "starlike") return StarlikeSpec{values};
  if (name == "caterpillar") return CaterpillarSpec{values};
  if (name == "doublestar") {
    if (values.size() != 2) throw Error(Errc::InvalidFamilySpec, "doublestar takes two parameters");
    return DoubleStarSpec{values[0], values[1]};
  }
  throw Error(Errc::InvalidFamilySpec, "unknown family '" + std::string(name) + "'");
}

inline std::string to_string(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const StarSpec& s) const { return "star:" + std::to_string(s.n); }
    std::string operator()(const PathSpec& s) const { return "path:" + std::to_string(s.n); }
    std::string operator()(const StarlikeSpec& s) const { return "starlike:" + detail::join_numbers(s.legs); }
    std::string operator()(const CaterpillarSpec& s) const {
      return "caterpillar:" + detail::join_numbers(s.spine);
    }
    std::string operator()(const DoubleStarSpec& s) const {
      return "doublestar:" + std::to_string(s.a) + "," + std::to_string(s.b);
    }
  };
  return std::visit(Visitor{}, spec);
}

inline Tree make_family(const FamilySpec& spec) {
  struct Builder {
    Tree operator()(const StarSpec& s) const {
      if (s.n < 1) throw Error(Errc::InvalidFamilySpec, "star needs n >= 1");
      std::vector<Edge> edges;
      for (Vertex v = 1; v < s.n; ++v) edges.emplace_back(0, v);
      return Tree::from_edges(s.n, edges);
    }
    Tree operator()(const PathSpec& s) const {
      if (s.n < 1) throw Error(Errc::InvalidFamilySpec, "path needs n >= 1");
      std::vector<Edge> edges;
      for (Vertex v = 1; v < s.n; ++v) edges.emplace_back(v - 1, v);
      return Tree::from_edges(s.n, edges);
    }
    Tree operator()(const StarlikeSpec& s) const {
      if (s.legs.size() < 3) throw Error(Errc::InvalidFamilySpec, "starlike needs at least 3 legs");
      std::vector<Edge> edges;
      Vertex next = 1;
      for (std::size_t len : s.legs) {
        if (len < 1) throw Error(Errc::InvalidFamilySpec, "starlike legs must have length >= 1");
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      return Tree::from_edges(next, edges);
    }
    Tree operator()(const CaterpillarSpec& s) const {
      const std::size_t k = s.spine.size();
      if (k == 0) throw Error(Errc::InvalidFamilySpec, "caterpillar needs a non-empty spine");
      for (std::size_t i = 0; i < k; ++i) {
        const bool end = i == 0 || i + 1 == k;
        if (s.spine[i] < (end ? 1u : 2u))
          throw Error(Errc::InvalidFamilySpec, "caterpillar spine degree " + std::to_string(s.spine[i]) +
                                                   " too small at position " + std::to_string(i + 1));
      }
      std::vector<Edge> edges;
      for (Vertex i = 1; i < k; ++i) edges.emplace_back(i - 1, i);
      Vertex next = static_cast<Vertex>(k);
      for (Vertex i = 0; i < k; ++i) {
        const std::size_t spine_neighbors = k == 1 ? 0 : (i == 0 || i + 1 == k ? 1 : 2);
        for (std::size_t p = spine_neighbors; p < s.spine[i]; ++p) edges.emplace_back(i, next++);
      }
      return Tree::from_edges(next, edges);
    }
    Tree operator()(const DoubleStarSpec& s) const {
      if (s.a < 1 || s.b < 1) throw Error(Errc::InvalidFamilySpec, "doublestar hubs need >= 1 pendant each");
      std::vector<Edge> edges{{0, 1}};
      Vertex next = 2;
      for (std::size_t i = 0; i < s.a; ++i) edges.emplace_back(0, next++);
      for (std::size_t i = 0; i < s.b; ++i) edges.emplace_back(1, next++);
      return Tree::from_edges(next, edges);
    }
  };
  return std::visit(Builder{}, spec);
}

}  // namespace treeidx
