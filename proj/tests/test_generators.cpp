// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "treeidx/canonical.hpp"
#include "treeidx/enumerate.hpp"
#include "treeidx/families.hpp"
#include "treeidx/indices.hpp"
#include "treeidx/prufer.hpp"
#include "treeidx/structure.hpp"

using namespace treeidx;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::EvaluationError;
}

std::vector<std::size_t> degrees(const Tree& t) {
  const auto ds = degree_sequence(t);
  return {ds.values().begin(), ds.values().end()};
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Every non-decreasing sequence of n positive integers summing to 2(n-1).
std::vector<std::vector<std::size_t>> realizable_sequences(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t lo, std::size_t remaining_sum) -> void {
    if (cur.size() == n) {
      if (remaining_sum == 0) out.push_back(cur);
      return;
    }
    for (std::size_t d = lo; d <= remaining_sum; ++d) {
      cur.push_back(d);
      self(self, d, remaining_sum - d);
      cur.pop_back();
    }
  };
  rec(rec, 1, 2 * (n - 1));
  return out;
}

}  // namespace

TEST(Families, Star) {
  const Tree t = make_family(StarSpec{5});
  EXPECT_EQ(degrees(t), (std::vector<std::size_t>{1, 1, 1, 1, 4}));
  EXPECT_EQ(make_family(StarSpec{1}), Tree());
}

TEST(Families, Starlike) {
  const Tree t = make_family(StarlikeSpec{{3, 2, 2, 2, 2, 2}});
  EXPECT_EQ(t.order(), 14u);
  EXPECT_EQ(t.degree(0), 6u);
  EXPECT_EQ(error_of([] { make_family(StarlikeSpec{{2, 2}}); }), Errc::InvalidFamilySpec);
  EXPECT_EQ(error_of([] { make_family(StarlikeSpec{{2, 0, 2}}); }), Errc::InvalidFamilySpec);
}

TEST(Families, Caterpillar) {
  const Tree t = make_family(CaterpillarSpec{{3, 4}});
  EXPECT_EQ(t.order(), 7u);
  EXPECT_EQ(albertson(t), 14);
  EXPECT_EQ(make_family(CaterpillarSpec{{4}}), make_family(StarSpec{5}));
  EXPECT_EQ(make_family(CaterpillarSpec{{1, 1}}), make_family(PathSpec{2}));
  EXPECT_EQ(make_family(CaterpillarSpec{{1, 2, 2, 1}}), make_family(PathSpec{4}));
  EXPECT_EQ(error_of([] { make_family(CaterpillarSpec{{3, 1, 3}}); }), Errc::InvalidFamilySpec);
  EXPECT_EQ(error_of([] { make_family(CaterpillarSpec{{0, 3}}); }), Errc::InvalidFamilySpec);
  EXPECT_EQ(error_of([] { make_family(CaterpillarSpec{{}}); }), Errc::InvalidFamilySpec);
}

TEST(Families, DoubleStar) {
  const Tree t = make_family(DoubleStarSpec{2, 3});
  EXPECT_EQ(t.order(), 7u);
  EXPECT_EQ(t.degree(0), 3u);
  EXPECT_EQ(t.degree(1), 4u);
  EXPECT_EQ(error_of([] { make_family(DoubleStarSpec{0, 3}); }), Errc::InvalidFamilySpec);
}

TEST(Families, SpecGrammar) {
  for (const char* text : {"star:7", "path:9", "starlike:3,2,2", "caterpillar:4,3,5", "doublestar:2,2"})
    EXPECT_EQ(to_string(parse_family_spec(text)), text);
  EXPECT_EQ(make_family(parse_family_spec("caterpillar:4,3,5")), make_family(CaterpillarSpec{{4, 3, 5}}));
  for (const char* bad : {"", "star", "star:", "star:x", "star:3,4", "tree:5", "doublestar:2", "path:1,,2",
                          "path:-3", "star: 3"})
    EXPECT_EQ(error_of([&] { parse_family_spec(bad); }), Errc::InvalidFamilySpec) << bad;
}

TEST(Enumerate, LabeledCounts) {
  const std::map<std::size_t, std::uint64_t> expected = {{1, 1},    {2, 1},     {3, 3},      {4, 16},
                                                         {5, 125}, {6, 1296}, {7, 16807}, {8, 262144}};
  for (const auto& [n, count] : expected) {
    std::uint64_t seen = 0;
    for_each_labeled(n, [&](const Tree& t) {
      EXPECT_EQ(t.order(), n);
      ++seen;
    });
    EXPECT_EQ(seen, count) << n;
  }
}

TEST(Enumerate, LabeledStreamIsLexicographicDecodeOrder) {
  std::vector<Tree> seen;
  for_each_labeled(4, [&](const Tree& t) { seen.push_back(t); });
  ASSERT_EQ(seen.size(), 16u);
  for (std::uint64_t r = 0; r < 16; ++r) EXPECT_EQ(seen[r], prufer_decode(code_at_rank(4, r)));
}

TEST(Enumerate, NonIsomorphicCounts) {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(census(n).size(), expected[n - 1]) << n;
}

TEST(Enumerate, CensusIsSortedAndWeighted) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto classes = census(n);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i) EXPECT_LT(classes[i - 1].key, classes[i].key);
      EXPECT_EQ(canonical_key(classes[i].tree), classes[i].key);
      if (n >= 2) EXPECT_EQ(prufer_decode(classes[i].witness), classes[i].tree);
      total += classes[i].labeled_count;
    }
    EXPECT_EQ(total, labeled_count(n));
  }
}

TEST(Enumerate, CensusIndependentOfJobs) {
  const auto a = census(8, 1);
  const auto b = census(8, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].key, b[i].key);
    EXPECT_EQ(a[i].tree, b[i].tree);
    EXPECT_EQ(a[i].witness, b[i].witness);
    EXPECT_EQ(a[i].labeled_count, b[i].labeled_count);
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_EQ(error_of([] { census(10); }), Errc::CapExceeded);
  EXPECT_EQ(error_of([] { for_each_labeled(11, [](const Tree&) {}, EnumerationLimits::forced()); }),
            Errc::CapExceeded);
  EXPECT_EQ(error_of([] { CensusCache cache; cache.get(12); }), Errc::CapExceeded);
}

TEST(Enumerate, DegreeAssignmentCountMatchesFormula) {
  // Fixed degree-to-label assignment: (n-2)! / prod (d_i - 1)! trees.
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& seq : realizable_sequences(n)) {
      std::vector<std::size_t> assignment = seq;
      do {
        std::uint64_t expected = factorial(n - 2);
        for (std::size_t d : assignment) expected /= factorial(d - 1);
        std::uint64_t count = 0;
        for_each_with_degree_assignment(assignment, [&](const Tree& t) {
          for (Vertex v = 0; v < n; ++v) ASSERT_EQ(t.degree(v), assignment[v]);
          ++count;
        });
        EXPECT_EQ(count, expected);
      } while (std::next_permutation(assignment.begin(), assignment.end()));
    }
  }
}

TEST(Enumerate, DegreeSequenceExamples) {
  std::uint64_t fixed = 0;
  const std::vector<std::size_t> assignment{1, 1, 2, 2};
  std::set<std::vector<Edge>> listed;
  for_each_with_degree_assignment(assignment, [&](const Tree& t) {
    ++fixed;
    listed.insert(t.edges());
  });
  EXPECT_EQ(fixed, 2u);
  // 0-2-3-1 and 0-3-2-1
  EXPECT_EQ(listed, (std::set<std::vector<Edge>>{{{0, 2}, {1, 3}, {2, 3}}, {{0, 3}, {1, 2}, {2, 3}}}));

  EXPECT_EQ(enumerate_with_degree_sequence(DegreeSequence({1, 1, 1, 3}), Isomorphism::NonIsomorphic).size(), 1u);
  // Order 5 has three trees in total; only the spider has degrees 11123.
  EXPECT_EQ(enumerate_with_degree_sequence(DegreeSequence({1, 1, 1, 2, 3}), Isomorphism::NonIsomorphic).size(), 1u);
  EXPECT_EQ(enumerate_with_degree_sequence(DegreeSequence({1, 1, 1, 2, 2, 3}), Isomorphism::NonIsomorphic).size(), 2u);
  EXPECT_EQ(enumerate_with_degree_sequence(DegreeSequence({1, 1, 2, 2}), Isomorphism::Labeled).size(), 12u);
  EXPECT_EQ(error_of([] { enumerate_with_degree_sequence(DegreeSequence({1, 1, 1, 1}), Isomorphism::Labeled); }),
            Errc::NotRealizable);
}

TEST(Enumerate, DegreeSequenceStreamsMatchCensus) {
  // Labeled counts per degree multiset agree with the census weights.
  for (std::size_t n = 2; n <= 7; ++n) {
    std::map<DegreeSequence, std::uint64_t> from_census;
    std::map<DegreeSequence, std::set<CanonicalKey>> keys;
    for (const auto& c : census(n)) {
      from_census[degree_sequence(c.tree)] += c.labeled_count;
      keys[degree_sequence(c.tree)].insert(c.key);
    }
    for (const auto& [ds, count] : from_census) {
      const auto labeled = enumerate_with_degree_sequence(ds, Isomorphism::Labeled);
      EXPECT_EQ(labeled.size(), count);
      for (const auto& t : labeled) EXPECT_EQ(degree_sequence(t), ds);
      const auto classes = enumerate_with_degree_sequence(ds, Isomorphism::NonIsomorphic);
      std::set<CanonicalKey> got;
      for (const auto& t : classes) got.insert(canonical_key(t));
      EXPECT_EQ(got, keys[ds]);
    }
  }
}

TEST(Enumerate, ClassNDelta) {
  const auto s = class_n_delta(5, 4);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(is_star(s[0]));
  const auto p = class_n_delta(5, 2);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(is_path(p[0]));
  EXPECT_EQ(class_n_delta(7, 3).size(), 5u);
  EXPECT_EQ(class_n_delta(7, 4).size(), 3u);
  EXPECT_EQ(error_of([] { class_n_delta(5, 5); }), Errc::EmptyClass);
  EXPECT_EQ(error_of([] { class_n_delta(5, 1); }), Errc::EmptyClass);

  std::size_t total = 0;
  for (std::size_t d = 2; d <= 7; ++d) total += class_n_delta(8, d).size();
  EXPECT_EQ(total, 23u);
}

TEST(Enumerate, CaterpillarArrangements) {
  auto spines = [](std::vector<std::size_t> m) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& a : caterpillar_arrangements(m)) out.push_back(a.spine);
    return out;
  };
  EXPECT_EQ(spines({3, 4}), (std::vector<std::vector<std::size_t>>{{3, 4}}));
  EXPECT_EQ(spines({4, 3, 2}), (std::vector<std::vector<std::size_t>>{{2, 3, 4}, {2, 4, 3}, {3, 2, 4}}));
  EXPECT_EQ(spines({3, 3, 3}).size(), 1u);
  EXPECT_EQ(spines({2, 3, 4, 5}).size(), 12u);
  EXPECT_EQ(spines({2, 2, 3, 3}).size(), 4u);  // 2233 2323 2332 3223
  EXPECT_EQ(albertson(caterpillar_arrangements({3, 4}).front().tree), 14);

  for (const auto& a : caterpillar_arrangements({2, 3, 4, 5})) {
    const auto spine = caterpillar_spine(a.tree);
    ASSERT_TRUE(spine);
    std::vector<std::size_t> d;
    for (Vertex v : *spine) d.push_back(a.tree.degree(v));
    std::vector<std::size_t> rev(a.spine.rbegin(), a.spine.rend());
    EXPECT_TRUE(d == a.spine || d == rev);
  }
  EXPECT_EQ(error_of([] { caterpillar_arrangements({3, 1, 3}); }), Errc::InvalidFamilySpec);
  EXPECT_EQ(error_of([] { caterpillar_arrangements({3}); }), Errc::InvalidFamilySpec);
}

TEST(Random, Deterministic) {
  EXPECT_EQ(random_tree(2, 1), make_family(PathSpec{2}));
  EXPECT_EQ(random_tree(2, 987654321), make_family(PathSpec{2}));
  EXPECT_EQ(random_tree(40, 17), random_tree(40, 17));
  EXPECT_NE(random_tree(40, 17), random_tree(40, 18));
  EXPECT_EQ(error_of([] { random_tree(1, 0); }), Errc::InvalidOrder);
}

TEST(Random, LeafMeanAtSix) {
  // Exact mean and variance of the leaf count over uniform labeled trees of
  // order 6, from the census: 625/216 and 20855/46656.
  double mean = 0, second = 0;
  for (const auto& c : census(6)) {
    std::size_t leaves = 0;
    for (Vertex v = 0; v < 6; ++v) leaves += c.tree.is_leaf(v);
    mean += double(c.labeled_count) * leaves;
    second += double(c.labeled_count) * leaves * leaves;
  }
  mean /= 1296;
  second /= 1296;
  EXPECT_NEAR(mean, 625.0 / 216, 1e-12);
  EXPECT_NEAR(second - mean * mean, 20855.0 / 46656, 1e-12);

  const int samples = 10000;
  double sum = 0;
  for (int seed = 0; seed < samples; ++seed) {
    const Tree t = random_tree(6, seed);
    for (Vertex v = 0; v < 6; ++v) sum += t.is_leaf(v);
  }
  const double empirical = sum / samples;
  const double sd = std::sqrt(20855.0 / 46656 / samples);
  EXPECT_LT(std::abs(empirical - 625.0 / 216), 3 * sd);
}

TEST(Random, UniformOverLabeledTreesOfFour) {
  std::map<std::vector<Edge>, int> hits;
  std::mt19937_64 rng(3);
  const int draws = 32000;
  for (int i = 0; i < draws; ++i) ++hits[prufer_decode(random_prufer(4, rng)).edges()];
  ASSERT_EQ(hits.size(), 16u);
  // chi-square with 15 degrees of freedom; 37.7 is the 0.999 quantile
  double chi2 = 0;
  for (const auto& [e, h] : hits) chi2 += (h - 2000.0) * (h - 2000.0) / 2000.0;
  EXPECT_LT(chi2, 37.7);
}
