// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "treeidx/canonical.hpp"
#include "treeidx/enumerate.hpp"
#include "treeidx/prufer.hpp"
#include "treeidx/tree.hpp"

namespace treeidx {

/// Every tree with n_min <= n <= n_max.
struct ExhaustiveDomain {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
};
/// Trees whose degree multiset is exactly `degrees`.
struct DegreeSequenceDomain {
  DegreeSequence degrees;
};
/// T(n, Delta): trees of order n with maximum degree exactly max_degree.
struct ClassDomain {
  std::size_t n;
  std::size_t max_degree;
};
/// `samples` uniform labeled trees of order n drawn from one seeded stream.
struct SampledDomain {
  std::size_t n;
  std::uint64_t samples;
  std::uint64_t seed;
};

struct DomainSpec {
  std::variant<ExhaustiveDomain, DegreeSequenceDomain, ClassDomain, SampledDomain> mode;
  Isomorphism isomorphism = Isomorphism::Labeled;
};

/// One scanned tree. For exhaustive modes each isomorphism class appears
/// once, weighted by its labeled multiplicity when scanning labeled trees.
struct DomainItem {
  const Tree* tree;
  CanonicalKey key;
  std::uint64_t weight;
};

/// Domain contents in scan order: (n, canonical key) for exhaustive modes,
/// draw order for sampled mode.
class DomainItems {
 public:
  DomainItems(const DomainSpec& spec, CensusCache& cache) {
    struct Visitor {
      DomainItems& self;
      const DomainSpec& spec;
      CensusCache& cache;
      void operator()(const ExhaustiveDomain& d) const {
        if (d.n_min < 1 || d.n_min > d.n_max) throw Error(Errc::InvalidOrder, "empty order range");
        check_cap(d.n_max, cache.limits());
        for (std::size_t n = d.n_min; n <= d.n_max; ++n)
          for (const auto& c : cache.get(n)) self.add(c, spec.isomorphism);
      }
      void operator()(const DegreeSequenceDomain& d) const {
        if (!d.degrees.is_tree_realizable())
          throw Error(Errc::NotRealizable, "degree sequence is not realizable by a tree");
        for (const auto& c : cache.get(d.degrees.size()))
          if (degree_sequence(c.tree) == d.degrees) self.add(c, spec.isomorphism);
      }
      void operator()(const ClassDomain& d) const {
        for (const auto& c : cache.get(d.n))
          if (max_degree(c.tree) == d.max_degree) self.add(c, spec.isomorphism);
      }
      void operator()(const SampledDomain& d) const {
        if (d.n < 2) throw Error(Errc::InvalidOrder, "sampled domains need n >= 2");
        std::mt19937_64 rng(d.seed);
        self.owned_.reserve(d.samples);
        for (std::uint64_t i = 0; i < d.samples; ++i) self.owned_.push_back(prufer_decode(random_prufer(d.n, rng)));
        for (const auto& t : self.owned_) self.items_.push_back({&t, canonical_key(t), 1});
      }
    };
    std::visit(Visitor{*this, spec, cache}, spec.mode);
  }

  DomainItems(const DomainItems&) = delete;
  DomainItems& operator=(const DomainItems&) = delete;

  const std::vector<DomainItem>& items() const noexcept { return items_; }

 private:
  void add(const TreeClass& c, Isomorphism iso) {
    items_.push_back({&c.tree, c.key, iso == Isomorphism::Labeled ? c.labeled_count : 1});
  }

  std::vector<Tree> owned_;
  std::vector<DomainItem> items_;
};

}  // namespace treeidx
