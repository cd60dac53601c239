// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON serialization of verification reports. Exact numbers (index values,
// expression results) are written as decimal strings so that no precision is
// lost; counts are plain JSON numbers.

#include <nlohmann/json.hpp>

#include <string>

#include "treeidx/verify.hpp"

namespace treeidx {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "malformed number '" + s + "'");
  }
}

inline ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

inline ordered_json counterexample_json(const Counterexample& c) {
  ordered_json j;
  j["n"] = c.n;
  j["edges"] = edges_json(c.edges);
  j["degrees"] = c.degrees;
  j["lhs"] = to_decimal(c.lhs);
  j["rhs"] = to_decimal(c.rhs);
  j["canonical_key"] = c.key.bytes;
  if (c.witness)
    j["prufer"] = c.witness->code;
  else
    j["prufer"] = nullptr;
  return j;
}

inline Counterexample counterexample_from_json(const ordered_json& j) {
  Counterexample c;
  c.n = j.at("n").get<std::size_t>();
  for (const auto& e : j.at("edges")) c.edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  c.degrees = j.at("degrees").get<std::vector<std::size_t>>();
  c.lhs = parse_rational(j.at("lhs").get<std::string>());
  c.rhs = parse_rational(j.at("rhs").get<std::string>());
  c.key.bytes = j.at("canonical_key").get<std::string>();
  if (!j.at("prufer").is_null()) c.witness = PruferCode{c.n, j.at("prufer").get<std::vector<Vertex>>()};
  return c;
}

inline ordered_json domain_json(const DomainEcho& d) {
  ordered_json j;
  j["mode"] = d.mode;
  for (const auto& [k, v] : d.fields) j[k] = std::stoull(v);
  if (d.mode == "degree_sequence") j["degrees"] = d.degrees;
  if (!d.multisets.empty() || d.mode == "spine_multisets") j["spine_multisets"] = d.multisets;
  if (!d.isomorphism.empty()) j["isomorphism"] = d.isomorphism;
  return j;
}

inline DomainEcho domain_from_json(const ordered_json& j) {
  DomainEcho d;
  for (const auto& [k, v] : j.items()) {
    if (k == "mode")
      d.mode = v.get<std::string>();
    else if (k == "degrees")
      d.degrees = v.get<std::vector<std::size_t>>();
    else if (k == "spine_multisets")
      d.multisets = v.get<std::vector<std::vector<std::size_t>>>();
    else if (k == "isomorphism")
      d.isomorphism = v.get<std::string>();
    else
      d.fields[k] = std::to_string(v.get<std::uint64_t>());
  }
  return d;
}

}  // namespace detail

inline ordered_json to_json(const Report& r) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  j["domain"] = detail::domain_json(r.domain);
  j["reading"] = std::string(to_string(r.reading));
  j["scanned"] = r.scanned;
  j["in_scope"] = r.in_scope;
  j["satisfied"] = r.satisfied;
  j["verdict"] = std::string(to_string(r.verdict));
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(detail::counterexample_json(c));
  j["wall_ms"] = r.wall_ms;
  j["kind"] = r.kind;
  j["notes"] = r.notes;
  if (!r.interpretations.empty()) {
    auto& list = j["interpretations"] = ordered_json::array();
    for (const auto& ir : r.interpretations) {
      ordered_json e;
      e["name"] = ir.name;
      e["in_scope"] = ir.in_scope;
      e["satisfied"] = ir.satisfied;
      e["verdict"] = std::string(to_string(ir.verdict));
      e["counterexamples"] = ordered_json::array();
      for (const auto& c : ir.counterexamples) e["counterexamples"].push_back(detail::counterexample_json(c));
      list.push_back(std::move(e));
    }
  }
  if (!r.arrangements.empty()) {
    auto& list = j["arrangements"] = ordered_json::array();
    for (const auto& a : r.arrangements) {
      ordered_json e;
      e["multiset"] = a.multiset;
      e["in_scope"] = a.in_scope;
      auto& values = e["values"] = ordered_json::array();
      for (const auto& [spine, value] : a.arrangements) values.push_back({{"spine", spine}, {"value", to_decimal(value)}});
      e["argmax"] = a.argmax;
      e["argmin"] = a.argmin;
      if (a.prescribed) {
        e["prescribed"] = *a.prescribed;
        e["prescribed_attains"] = *a.prescribed_attains;
      }
      list.push_back(std::move(e));
    }
  }
  return j;
}

inline Report report_from_json(const ordered_json& j) {
  try {
    Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.domain = detail::domain_from_json(j.at("domain"));
    r.reading = parse_reading(j.at("reading").get<std::string>());
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.in_scope = j.at("in_scope").get<std::uint64_t>();
    r.satisfied = j.at("satisfied").get<std::uint64_t>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(detail::counterexample_from_json(c));
    r.wall_ms = j.at("wall_ms").get<double>();
    r.kind = j.value("kind", std::string());
    r.notes = j.value("notes", std::vector<std::string>{});
    if (j.contains("interpretations")) {
      for (const auto& e : j.at("interpretations")) {
        InterpretationReport ir;
        ir.name = e.at("name").get<std::string>();
        ir.in_scope = e.at("in_scope").get<std::uint64_t>();
        ir.satisfied = e.at("satisfied").get<std::uint64_t>();
        ir.verdict = parse_verdict(e.at("verdict").get<std::string>());
        for (const auto& c : e.at("counterexamples")) ir.counterexamples.push_back(detail::counterexample_from_json(c));
        r.interpretations.push_back(std::move(ir));
      }
    }
    if (j.contains("arrangements")) {
      for (const auto& e : j.at("arrangements")) {
        ArrangementReport a;
        a.multiset = e.at("multiset").get<std::vector<std::size_t>>();
        a.in_scope = e.at("in_scope").get<bool>();
        for (const auto& v : e.at("values"))
          a.arrangements.emplace_back(v.at("spine").get<std::vector<std::size_t>>(),
                                      detail::parse_rational(v.at("value").get<std::string>()));
        a.argmax = e.at("argmax").get<std::vector<std::vector<std::size_t>>>();
        a.argmin = e.at("argmin").get<std::vector<std::vector<std::size_t>>>();
        if (e.contains("prescribed")) {
          a.prescribed = e.at("prescribed").get<std::vector<std::size_t>>();
          a.prescribed_attains = e.at("prescribed_attains").get<bool>();
        }
        r.arrangements.push_back(std::move(a));
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace treeidx
