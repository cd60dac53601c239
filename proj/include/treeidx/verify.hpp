// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "treeidx/claim.hpp"
#include "treeidx/domain.hpp"
#include "treeidx/enumerate.hpp"
#include "treeidx/expression.hpp"
#include "treeidx/families.hpp"
#include "treeidx/structure.hpp"

namespace treeidx {

enum class Verdict { HoldsOnDomain, Fails, InterpretationRequired };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnDomain: return "HOLDS_ON_DOMAIN";
    case Verdict::Fails: return "FAILS";
    case Verdict::InterpretationRequired: return "INTERPRETATION_REQUIRED";
  }
  return "?";
}

inline Verdict parse_verdict(std::string_view s) {
  if (s == "HOLDS_ON_DOMAIN") return Verdict::HoldsOnDomain;
  if (s == "FAILS") return Verdict::Fails;
  if (s == "INTERPRETATION_REQUIRED") return Verdict::InterpretationRequired;
  throw Error(Errc::ParseError, "unknown verdict '" + std::string(s) + "'");
}

struct VerifyOptions {
  Reading reading = Reading::NonDecreasing;
  std::size_t max_counterexamples = 5;
  std::size_t jobs = 1;
};

/// Longest spine whose orderings are enumerated (9!/2 arrangements).
inline constexpr std::size_t kMaxArrangementSpine = 9;

inline constexpr std::string_view kMinOverClass = "min_over_class";
inline constexpr std::string_view kMaxOverClass = "max_over_class";

struct InterpretationEvaluation {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct ClaimEvaluation {
  CanonicalKey key;
  std::optional<PruferCode> witness;  ///< absent for the single vertex
  bool in_scope = false;
  std::optional<bool> holds;          ///< set only when in scope
  Rational lhs;
  Rational rhs;
  std::vector<InterpretationEvaluation> interpretations;
};

/// Order-wide statistics needed by claims that compare a tree with the rest
/// of its order: the class-minimum for existence claims, the extremum for
/// unique-extremal claims, and per-degree-sequence ranges for class claims.
class ClassContext {
 public:
  struct ClassRange {
    Rational min;
    Rational max;
    Rational rhs_min;  ///< min over classes D' with sum(D') >= sum(D) of D'.min
    Rational rhs_max;
  };
  struct OrderStats {
    std::map<std::size_t, Rational> min_by_max_degree;
    Rational extremum;
    std::map<DegreeSequence, ClassRange> classes;
  };

  ClassContext(const Claim& claim, Reading reading, CensusCache& cache)
      : claim_(claim), reading_(reading), cache_(cache) {}

  const OrderStats& stats(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = stats_.find(n);
    if (it != stats_.end()) return it->second;
    return stats_.emplace(n, compute(n)).first->second;
  }

 private:
  OrderStats compute(std::size_t n) {
    const Expression* objective = nullptr;
    std::optional<Direction> direction;
    std::visit(
        [&](const auto& body) {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, ExistsLowerBody> || std::is_same_v<B, ClassMonotoneBody>) {
            objective = &body.objective;
          } else if constexpr (std::is_same_v<B, UniqueExtremalBody>) {
            objective = &body.objective;
            direction = body.direction;
          }
        },
        claim_.body);
    if (!objective) throw Error(Errc::EvaluationError, "claim " + claim_.id + " needs no class statistics");

    OrderStats out;
    bool first = true;
    for (const auto& c : cache_.get(n)) {
      const TreeFacts facts(c.tree);
      const Rational value = objective->evaluate(facts, reading_);
      const std::size_t delta = facts.degrees().max();
      auto [slot, inserted] = out.min_by_max_degree.try_emplace(delta, value);
      if (!inserted && value < slot->second) slot->second = value;
      if (first || (direction == Direction::Max ? value > out.extremum : value < out.extremum)) out.extremum = value;
      first = false;
      auto [range, fresh] = out.classes.try_emplace(facts.degrees(), ClassRange{value, value, 0, 0});
      if (!fresh) {
        range->second.min = std::min(range->second.min, value);
        range->second.max = std::max(range->second.max, value);
      }
    }
    for (auto& [ds, range] : out.classes) {
      bool any = false;
      for (const auto& [other, other_range] : out.classes) {
        if (other.sum() < ds.sum()) continue;
        if (!any || other_range.min < range.rhs_min) range.rhs_min = other_range.min;
        if (!any || other_range.max < range.rhs_max) range.rhs_max = other_range.max;
        any = true;
      }
    }
    return out;
  }

  const Claim& claim_;
  Reading reading_;
  CensusCache& cache_;
  std::mutex mutex_;
  std::map<std::size_t, OrderStats> stats_;
};

inline bool needs_class_context(const Claim& c) {
  return std::holds_alternative<ExistsLowerBody>(c.body) || std::holds_alternative<UniqueExtremalBody>(c.body) ||
         std::holds_alternative<ClassMonotoneBody>(c.body);
}

namespace detail {

struct ArrangementOutcome {
  std::vector<std::size_t> multiset;
  bool in_scope = false;
  std::vector<std::pair<std::vector<std::size_t>, Rational>> values;
  std::vector<std::vector<std::size_t>> argmax, argmin;
  Rational max, min;
  std::optional<std::vector<std::size_t>> prescribed;
  std::optional<bool> prescribed_attains;
};

inline ArrangementOutcome analyse_arrangements(const ArrangementBody& body, std::vector<std::size_t> multiset,
                                               Reading reading) {
  std::sort(multiset.begin(), multiset.end());
  if (multiset.size() < 3) throw Error(Errc::InvalidFamilySpec, "spine multisets need at least 3 degrees");
  if (multiset.size() > kMaxArrangementSpine)
    throw Error(Errc::CapExceeded, "spine of " + std::to_string(multiset.size()) + " vertices exceeds the cap of " +
                                       std::to_string(kMaxArrangementSpine));
  ArrangementOutcome out;
  out.multiset = multiset;
  out.in_scope = !body.distinct_degrees || std::adjacent_find(multiset.begin(), multiset.end()) == multiset.end();
  const auto arrangements = caterpillar_arrangements(multiset);
  for (const auto& a : arrangements) {
    const TreeFacts facts(a.tree);
    out.values.emplace_back(a.spine, body.objective.evaluate(facts, reading));
  }
  out.max = out.values.front().second;
  out.min = out.values.front().second;
  for (const auto& [spine, value] : out.values) {
    out.max = std::max(out.max, value);
    out.min = std::min(out.min, value);
  }
  for (const auto& [spine, value] : out.values) {
    if (value == out.max) out.argmax.push_back(spine);
    if (value == out.min) out.argmin.push_back(spine);
  }
  if (body.prescription == Prescription::Monotone) {
    out.prescribed = multiset;  // ascending is its own reversal-class representative
    const auto& target = body.direction == Direction::Max ? out.argmax : out.argmin;
    out.prescribed_attains = std::find(target.begin(), target.end(), multiset) != target.end();
  }
  return out;
}

/// Spine degrees of a caterpillar whose spine has >= 3 vertices, all of degree >= 2.
inline std::optional<std::vector<std::size_t>> arrangement_spine(const Tree& t) {
  const auto spine = caterpillar_spine(t);
  if (!spine || spine->size() < 3) return std::nullopt;
  std::vector<std::size_t> degrees;
  for (Vertex v : *spine) {
    if (t.degree(v) < 2) return std::nullopt;
    degrees.push_back(t.degree(v));
  }
  return degrees;
}

}  // namespace detail

/// Exact evaluation of one claim on one tree. Claims that compare a tree
/// with its whole order use `context`; without one a private context over a
/// default-capped census is built.
inline ClaimEvaluation evaluate_claim(const Claim& claim, const Tree& t, Reading reading = Reading::NonDecreasing,
                                      ClassContext* context = nullptr) {
  ClaimEvaluation out;
  out.key = canonical_key(t);
  if (t.order() >= 2) out.witness = prufer_encode(t);

  const TreeFacts facts(t);
  out.in_scope = claim.scope.evaluate(facts, reading);

  std::optional<CensusCache> local_cache;
  std::optional<ClassContext> local_context;
  auto ctx = [&]() -> ClassContext& {
    if (context) return *context;
    if (!local_context) {
      local_cache.emplace();
      local_context.emplace(claim, reading, *local_cache);
    }
    return *local_context;
  };

  struct Visitor {
    ClaimEvaluation& out;
    const TreeFacts& facts;
    Reading reading;
    const std::function<ClassContext&()>& ctx;

    void operator()(const RelationBody& body) const {
      bool all = true;
      bool reported = false;
      for (const auto& rel : body.relations) {
        Rational lhs = rel.lhs.evaluate(facts, reading);
        Rational rhs = rel.rhs.evaluate(facts, reading);
        const bool ok = compare(lhs, rel.rel, rhs);
        if (!reported || (!ok && all)) {
          out.lhs = std::move(lhs);
          out.rhs = std::move(rhs);
          reported = true;
        }
        all = all && ok;
      }
      out.holds = all;
    }
    void operator()(const ExistsLowerBody& body) const {
      out.lhs = body.objective.evaluate(facts, reading);
      out.rhs = ctx().stats(facts.n()).min_by_max_degree.at(facts.degrees().max());
      out.holds = out.lhs > out.rhs;
    }
    void operator()(const UniqueExtremalBody& body) const {
      out.lhs = body.objective.evaluate(facts, reading);
      out.rhs = ctx().stats(facts.n()).extremum;
      out.holds = (out.lhs == out.rhs) == body.expected.evaluate(facts, reading);
    }
    void operator()(const ClassMonotoneBody&) const {
      const auto& range = ctx().stats(facts.n()).classes.at(facts.degrees());
      out.interpretations.push_back({std::string(kMinOverClass), range.min, range.rhs_min, range.min <= range.rhs_min});
      out.interpretations.push_back({std::string(kMaxOverClass), range.max, range.rhs_max, range.max <= range.rhs_max});
      const auto& failing = out.interpretations[0].holds ? out.interpretations[1] : out.interpretations[0];
      out.lhs = failing.lhs;
      out.rhs = failing.rhs;
      out.holds = out.interpretations[0].holds && out.interpretations[1].holds;
    }
    void operator()(const ArrangementBody& body) const {
      const auto spine = detail::arrangement_spine(facts.tree());
      if (!spine || spine->size() > kMaxArrangementSpine) {
        out.in_scope = false;
        return;
      }
      const auto outcome = detail::analyse_arrangements(body, *spine, reading);
      if (!outcome.in_scope) {
        out.in_scope = false;
        return;
      }
      if (outcome.prescribed) {
        std::vector<std::size_t> reversed(spine->rbegin(), spine->rend());
        if (*spine != *outcome.prescribed && reversed != *outcome.prescribed) {
          out.in_scope = false;
          return;
        }
      }
      out.lhs = body.objective.evaluate(facts, reading);
      out.rhs = body.direction == Direction::Max ? outcome.max : outcome.min;
      out.holds = out.lhs == out.rhs;
    }
  };
  if (out.in_scope) {
    const std::function<ClassContext&()> ctx_fn = ctx;
    std::visit(Visitor{out, facts, reading, ctx_fn}, claim.body);
    if (!out.in_scope) out.holds.reset();
  }
  return out;
}

struct Counterexample {
  std::size_t n = 0;
  CanonicalKey key;
  std::optional<PruferCode> witness;
  std::vector<Edge> edges;
  std::vector<std::size_t> degrees;
  Rational lhs;
  Rational rhs;
};

struct InterpretationReport {
  std::string name;
  std::uint64_t in_scope = 0;
  std::uint64_t satisfied = 0;
  Verdict verdict = Verdict::HoldsOnDomain;
  std::vector<Counterexample> counterexamples;
};

struct ArrangementReport {
  std::vector<std::size_t> multiset;
  bool in_scope = false;
  std::vector<std::pair<std::vector<std::size_t>, Rational>> arrangements;
  std::vector<std::vector<std::size_t>> argmax;
  std::vector<std::vector<std::size_t>> argmin;
  std::optional<std::vector<std::size_t>> prescribed;
  std::optional<bool> prescribed_attains;
};

/// Domain description echoed into reports.
struct DomainEcho {
  std::string mode;
  std::map<std::string, std::string> fields;  ///< written as JSON numbers where numeric
  std::vector<std::size_t> degrees;
  std::vector<std::vector<std::size_t>> multisets;
  std::string isomorphism;
};

struct Report {
  std::string claim_id;
  std::string kind;
  DomainEcho domain;
  Reading reading = Reading::NonDecreasing;
  std::uint64_t scanned = 0;
  std::uint64_t in_scope = 0;
  std::uint64_t satisfied = 0;
  Verdict verdict = Verdict::HoldsOnDomain;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  std::vector<InterpretationReport> interpretations;
  std::vector<ArrangementReport> arrangements;
  double wall_ms = 0;
};

inline std::string_view to_string(Isomorphism iso) {
  return iso == Isomorphism::Labeled ? "labeled" : "nonisomorphic";
}

inline DomainEcho echo(const DomainSpec& spec) {
  DomainEcho out;
  out.isomorphism = std::string(to_string(spec.isomorphism));
  struct Visitor {
    DomainEcho& out;
    void operator()(const ExhaustiveDomain& d) const {
      out.mode = "exhaustive";
      out.fields = {{"n_min", std::to_string(d.n_min)}, {"n_max", std::to_string(d.n_max)}};
    }
    void operator()(const DegreeSequenceDomain& d) const {
      out.mode = "degree_sequence";
      out.degrees.assign(d.degrees.values().begin(), d.degrees.values().end());
    }
    void operator()(const ClassDomain& d) const {
      out.mode = "class_n_delta";
      out.fields = {{"n", std::to_string(d.n)}, {"delta_max", std::to_string(d.max_degree)}};
    }
    void operator()(const SampledDomain& d) const {
      out.mode = "sampled";
      out.fields = {{"n", std::to_string(d.n)},
                    {"samples", std::to_string(d.samples)},
                    {"seed", std::to_string(d.seed)}};
    }
  };
  std::visit(Visitor{out}, spec.mode);
  return out;
}

namespace detail {

inline Counterexample make_counterexample(const Tree& t, const CanonicalKey& key, const Rational& lhs,
                                          const Rational& rhs) {
  Counterexample c;
  c.n = t.order();
  c.key = key;
  if (t.order() >= 2) c.witness = prufer_encode(t);
  c.edges = t.edges();
  const auto ds = degree_sequence(t);
  c.degrees.assign(ds.values().begin(), ds.values().end());
  c.lhs = lhs;
  c.rhs = rhs;
  return c;
}

/// The `limit` smallest violations under (n, canonical key); on a repeated
/// key the first one added wins, which is the earliest in scan order when
/// chunks are merged in order.
class CounterexampleSet {
 public:
  explicit CounterexampleSet(std::size_t limit) : limit_(limit) {}

  void add(const Tree& t, const CanonicalKey& key, const Rational& lhs, const Rational& rhs) {
    if (limit_ == 0) return;
    const Slot slot{t.order(), key};
    if (best_.size() >= limit_ && !(slot < best_.rbegin()->first)) return;
    if (best_.count(slot)) return;
    best_.emplace(slot, make_counterexample(t, key, lhs, rhs));
    if (best_.size() > limit_) best_.erase(std::prev(best_.end()));
  }

  void merge(const CounterexampleSet& later) {
    for (const auto& [slot, c] : later.best_) {
      if (best_.count(slot)) continue;
      best_.emplace(slot, c);
      if (best_.size() > limit_) best_.erase(std::prev(best_.end()));
    }
  }

  std::vector<Counterexample> list() const {
    std::vector<Counterexample> out;
    for (const auto& [slot, c] : best_) out.push_back(c);
    return out;
  }

 private:
  using Slot = std::pair<std::size_t, CanonicalKey>;
  std::size_t limit_;
  std::map<Slot, Counterexample> best_;
};

struct ScanTally {
  explicit ScanTally(std::size_t limit) : counterexamples(limit), per_interpretation(2, Sub{CounterexampleSet(limit)}) {}

  struct Sub {
    CounterexampleSet counterexamples;
    std::uint64_t in_scope = 0;
    std::uint64_t satisfied = 0;
  };

  std::uint64_t scanned = 0;
  std::uint64_t in_scope = 0;
  std::uint64_t satisfied = 0;
  CounterexampleSet counterexamples;
  std::vector<Sub> per_interpretation;

  void merge(const ScanTally& later) {
    scanned += later.scanned;
    in_scope += later.in_scope;
    satisfied += later.satisfied;
    counterexamples.merge(later.counterexamples);
    for (std::size_t i = 0; i < per_interpretation.size(); ++i) {
      per_interpretation[i].in_scope += later.per_interpretation[i].in_scope;
      per_interpretation[i].satisfied += later.per_interpretation[i].satisfied;
      per_interpretation[i].counterexamples.merge(later.per_interpretation[i].counterexamples);
    }
  }
};

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void add_scope_note(Report& r) {
  if (r.in_scope == 0) r.notes.push_back("no scanned tree satisfies the scope; the verdict is vacuous");
}

}  // namespace detail

/// Scans every spine multiset (size >= 3, degrees >= 2), enumerating all
/// arrangements up to reversal and recording the true argmax/argmin of the
/// objective. The verdict is INTERPRETATION_REQUIRED: the report lists the
/// extremal arrangements instead of endorsing one reading of the claim.
inline Report verify_arrangement_extremal(const Claim& claim, std::vector<std::vector<std::size_t>> multisets,
                                          const VerifyOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto* body = std::get_if<ArrangementBody>(&claim.body);
  if (!body) throw Error(Errc::EvaluationError, "claim " + claim.id + " is not an arrangement claim");
  for (auto& m : multisets) {
    std::sort(m.begin(), m.end());
    for (std::size_t d : m)
      if (d < 2) throw Error(Errc::InvalidFamilySpec, "spine degrees must be at least 2");
  }
  std::sort(multisets.begin(), multisets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  multisets.erase(std::unique(multisets.begin(), multisets.end()), multisets.end());

  Report r;
  r.claim_id = claim.id;
  r.kind = std::string(claim.kind());
  r.reading = options.reading;
  r.domain.mode = "spine_multisets";
  r.domain.multisets = multisets;
  r.notes = claim.notes;
  detail::CounterexampleSet counterexamples(options.max_counterexamples);
  for (const auto& m : multisets) {
    const auto outcome = detail::analyse_arrangements(*body, m, options.reading);
    ++r.scanned;
    ArrangementReport entry{outcome.multiset,        outcome.in_scope,          outcome.values, outcome.argmax,
                            outcome.argmin,          outcome.prescribed,        outcome.prescribed_attains};
    if (outcome.in_scope) {
      ++r.in_scope;
      if (outcome.prescribed_attains.value_or(false)) ++r.satisfied;
      if (outcome.prescribed_attains == false) {
        const Tree t = make_family(CaterpillarSpec{*outcome.prescribed});
        const Rational value = body->objective.evaluate(TreeFacts(t), options.reading);
        counterexamples.add(t, canonical_key(t), value, body->direction == Direction::Max ? outcome.max : outcome.min);
      }
    }
    r.arrangements.push_back(std::move(entry));
  }
  r.counterexamples = counterexamples.list();
  r.verdict = Verdict::InterpretationRequired;
  detail::add_scope_note(r);
  r.wall_ms = detail::elapsed_ms(start);
  return r;
}

/// Scans the domain and aggregates. Domain work is split into `jobs`
/// contiguous chunks whose tallies merge associatively, so the report does
/// not depend on the worker count.
inline Report verify_claim(const Claim& claim, const DomainSpec& domain, const VerifyOptions& options,
                           CensusCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  const DomainItems contents(domain, cache);
  const auto& items = contents.items();

  if (std::holds_alternative<ArrangementBody>(claim.body)) {
    std::set<std::vector<std::size_t>> multisets;
    std::size_t skipped = 0;
    for (const auto& item : items) {
      auto spine = detail::arrangement_spine(*item.tree);
      if (!spine) continue;
      if (spine->size() > kMaxArrangementSpine) {
        ++skipped;
        continue;
      }
      std::sort(spine->begin(), spine->end());
      multisets.insert(*spine);
    }
    Report r = verify_arrangement_extremal(claim, {multisets.begin(), multisets.end()}, options);
    r.domain = echo(domain);
    r.domain.multisets.assign(multisets.begin(), multisets.end());
    if (skipped)
      r.notes.push_back(std::to_string(skipped) + " caterpillars with spines longer than " +
                        std::to_string(kMaxArrangementSpine) + " were skipped");
    r.wall_ms = detail::elapsed_ms(start);
    return r;
  }

  std::optional<ClassContext> context;
  if (needs_class_context(claim)) {
    context.emplace(claim, options.reading, cache);
    std::set<std::size_t> orders;
    for (const auto& item : items) orders.insert(item.tree->order());
    for (std::size_t n : orders) context->stats(n);
  }
  const bool monotone = std::holds_alternative<ClassMonotoneBody>(claim.body);

  const std::size_t parts = std::max<std::size_t>(1, std::min(options.jobs, std::max<std::size_t>(items.size(), 1)));
  std::vector<detail::ScanTally> tallies(parts, detail::ScanTally(options.max_counterexamples));
  std::vector<std::exception_ptr> errors(parts);
  detail::run_partitioned(items.size(), parts, [&](std::uint64_t first, std::uint64_t last, std::size_t part) {
    try {
      auto& tally = tallies[part];
      for (std::uint64_t i = first; i < last; ++i) {
        const auto& item = items[i];
        const auto eval = evaluate_claim(claim, *item.tree, options.reading, context ? &*context : nullptr);
        tally.scanned += item.weight;
        if (!eval.in_scope) continue;
        tally.in_scope += item.weight;
        if (*eval.holds)
          tally.satisfied += item.weight;
        else
          tally.counterexamples.add(*item.tree, item.key, eval.lhs, eval.rhs);
        for (std::size_t k = 0; k < eval.interpretations.size(); ++k) {
          auto& sub = tally.per_interpretation[k];
          const auto& ie = eval.interpretations[k];
          sub.in_scope += item.weight;
          if (ie.holds)
            sub.satisfied += item.weight;
          else
            sub.counterexamples.add(*item.tree, item.key, ie.lhs, ie.rhs);
        }
      }
    } catch (...) {
      errors[part] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  detail::ScanTally total = std::move(tallies.front());
  for (std::size_t i = 1; i < tallies.size(); ++i) total.merge(tallies[i]);

  Report r;
  r.claim_id = claim.id;
  r.kind = std::string(claim.kind());
  r.domain = echo(domain);
  r.reading = options.reading;
  r.scanned = total.scanned;
  r.in_scope = total.in_scope;
  r.satisfied = total.satisfied;
  r.counterexamples = total.counterexamples.list();
  r.notes = claim.notes;
  if (monotone) {
    const std::string_view names[] = {kMinOverClass, kMaxOverClass};
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& sub = total.per_interpretation[k];
      InterpretationReport ir{std::string(names[k]), sub.in_scope, sub.satisfied,
                              sub.in_scope == sub.satisfied ? Verdict::HoldsOnDomain : Verdict::Fails,
                              sub.counterexamples.list()};
      r.interpretations.push_back(std::move(ir));
    }
    const bool a = r.interpretations[0].verdict == Verdict::HoldsOnDomain;
    const bool b = r.interpretations[1].verdict == Verdict::HoldsOnDomain;
    r.verdict = a && b ? Verdict::HoldsOnDomain : (!a && !b ? Verdict::Fails : Verdict::InterpretationRequired);
  } else {
    r.verdict = r.in_scope == r.satisfied ? Verdict::HoldsOnDomain : Verdict::Fails;
  }
  detail::add_scope_note(r);
  r.wall_ms = detail::elapsed_ms(start);
  return r;
}

inline Report verify_claim(const Claim& claim, const DomainSpec& domain, const VerifyOptions& options = {}) {
  CensusCache cache(options.jobs);
  return verify_claim(claim, domain, options, cache);
}

/// Smallest violation under (n, canonical key) for exhaustive modes; the
/// first violation in draw order for sampled mode.
inline std::optional<std::pair<Tree, ClaimEvaluation>> find_counterexample(const Claim& claim,
                                                                           const DomainSpec& domain,
                                                                           const VerifyOptions& options,
                                                                           CensusCache& cache) {
  if (std::holds_alternative<ArrangementBody>(claim.body)) {
    VerifyOptions one = options;
    one.max_counterexamples = 1;
    const Report r = verify_claim(claim, domain, one, cache);
    if (r.counterexamples.empty()) return std::nullopt;
    const Tree t = Tree::from_edges(r.counterexamples[0].n, r.counterexamples[0].edges);
    return std::pair{t, evaluate_claim(claim, t, options.reading)};
  }

  std::optional<ClassContext> context;
  if (needs_class_context(claim)) context.emplace(claim, options.reading, cache);
  ClassContext* ctx = context ? &*context : nullptr;

  if (const auto* sampled = std::get_if<SampledDomain>(&domain.mode)) {
    if (sampled->n < 2) throw Error(Errc::InvalidOrder, "sampled domains need n >= 2");
    std::mt19937_64 rng(sampled->seed);
    for (std::uint64_t i = 0; i < sampled->samples; ++i) {
      Tree t = prufer_decode(random_prufer(sampled->n, rng));
      auto eval = evaluate_claim(claim, t, options.reading, ctx);
      if (eval.in_scope && !*eval.holds) return std::pair{std::move(t), std::move(eval)};
    }
    return std::nullopt;
  }

  const DomainItems contents(domain, cache);
  for (const auto& item : contents.items()) {
    auto eval = evaluate_claim(claim, *item.tree, options.reading, ctx);
    if (eval.in_scope && !*eval.holds) return std::pair{*item.tree, std::move(eval)};
  }
  return std::nullopt;
}

inline std::optional<std::pair<Tree, ClaimEvaluation>> find_counterexample(const Claim& claim,
                                                                           const DomainSpec& domain,
                                                                           const VerifyOptions& options = {}) {
  CensusCache cache(options.jobs);
  return find_counterexample(claim, domain, options, cache);
}

}  // namespace treeidx
