// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "treeidx/error.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

// Edge-list text format:
//   n
//   u v
//   u v
//   ...
// 0-based labels, whitespace-separated, LF line endings. A single trailing
// newline is allowed; anything else after the last pair is rejected.

inline std::string to_edge_list(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

inline std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                      std::string(field) + "'");
  return value;
}

}  // namespace detail

/// Parses the edge-list format and validates the result as a tree.
inline Tree parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::ParseError, "empty input");

  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].find('\r') != std::string_view::npos)
      throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": CR characters are not allowed");

  const auto header = detail::split_fields(lines[0]);
  if (header.size() != 1) throw Error(Errc::ParseError, "line 1: expected the vertex count alone");
  const std::size_t n = detail::parse_count(header[0], 1);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i]);
    if (fields.size() != 2)
      throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": expected exactly two labels");
    const auto u = detail::parse_count(fields[0], i + 1);
    const auto v = detail::parse_count(fields[1], i + 1);
    if (u > UINT32_MAX || v > UINT32_MAX)
      throw Error(Errc::InvalidLabel, "line " + std::to_string(i + 1) + ": label too large");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Tree::from_edges(n, edges);
}

}  // namespace treeidx
