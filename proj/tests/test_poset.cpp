// Copyright 2026 The posetcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetcount/poset.hpp"

#include <gtest/gtest.h>

#include "posetcount/graph.hpp"
#include "posetcount/oracle.hpp"
#include "test_support.hpp"

namespace posetcount {
namespace {

using testing::antichain;
using testing::chain;
using testing::path_poset;
using Elems = std::vector<Element>;

Elems list(std::span<const Element> s) { return {s.begin(), s.end()}; }

TEST(PosetFromArcs, EmptyArcSetIsAntichain) {
  const Poset p = poset_from_arcs(3, {});
  for (Element v = 0; v < 3; ++v) EXPECT_TRUE(p.predecessors(v).empty());
  EXPECT_EQ(p.comparable_pairs(), 0u);
  EXPECT_EQ(p.incomparable_pairs(), 3u);
}

TEST(PosetFromArcs, ClosesTransitively) {
  const std::vector<Arc> arcs{{0, 1}, {1, 2}};
  const Poset p = poset_from_arcs(3, arcs);
  EXPECT_EQ(list(p.predecessors(2)), (Elems{0, 1}));
  EXPECT_EQ(list(p.successors(0)), (Elems{1, 2}));
  EXPECT_EQ(p.comparable_pairs(), 3u);
  EXPECT_TRUE(p.precedes(0, 2));
  EXPECT_FALSE(p.precedes(2, 0));
}

TEST(PosetFromArcs, RejectsTwoCycle) {
  const std::vector<Arc> arcs{{0, 1}, {1, 0}};
  try {
    poset_from_arcs(2, arcs);
    FAIL() << "cycle accepted";
  } catch (const CycleDetected& e) {
    auto cycle = e.cycle();
    std::sort(cycle.begin(), cycle.end());
    EXPECT_EQ(cycle, (Elems{0, 1}));
  }
}

TEST(PosetFromArcs, CycleWitnessFollowsArcs) {
  // 0 -> 1 -> 2 -> 3 -> 1 plus a dangling 4.
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 1}, {4, 0}};
  try {
    poset_from_arcs(5, arcs);
    FAIL() << "cycle accepted";
  } catch (const CycleDetected& e) {
    const auto& c = e.cycle();
    ASSERT_EQ(c.size(), 3u);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Arc arc{c[i], c[(i + 1) % c.size()]};
      EXPECT_NE(std::find(arcs.begin(), arcs.end(), arc), arcs.end());
    }
  }
}

TEST(PosetFromArcs, RejectsSelfLoopAndOutOfRange) {
  const std::vector<Arc> loop{{1, 1}};
  EXPECT_THROW(poset_from_arcs(2, loop), CycleDetected);
  const std::vector<Arc> far{{0, 5}};
  EXPECT_THROW(poset_from_arcs(2, far), ElementOutOfRange);
}

TEST(PosetFromArcs, DuplicateArcsAreHarmless) {
  const std::vector<Arc> arcs{{0, 1}, {0, 1}, {1, 2}, {0, 2}};
  EXPECT_EQ(poset_from_arcs(3, arcs), chain(3));
}

TEST(LinearExtension, ChainAndAntichain) {
  EXPECT_EQ(list(linear_extension(chain(3)).order()), (Elems{0, 1, 2}));
  EXPECT_EQ(list(linear_extension(antichain(3)).order()), (Elems{0, 1, 2}));
}

TEST(LinearExtension, TieBreakPrefersSmallIds) {
  const std::vector<Arc> arcs{{2, 0}};
  EXPECT_EQ(list(linear_extension(poset_from_arcs(3, arcs)).order()),
            (Elems{1, 2, 0}));
}

TEST(LinearExtension, PathPosetRespectsEveryComparablePair) {
  const Poset p = path_poset(4);
  const LinearExtension le = linear_extension(p);
  EXPECT_EQ(list(le.order()), (Elems{0, 1, 2, 3}));
  int pairs = 0;
  for (Element u = 0; u < 4; ++u) {
    for (Element v = 0; v < 4; ++v) {
      if (p.precedes(u, v)) {
        ++pairs;
        EXPECT_LT(le.rank(u), le.rank(v));
      }
    }
  }
  EXPECT_EQ(pairs, 3);
}

TEST(LinearExtension, FromOrderRejectsNonPermutations) {
  EXPECT_THROW(LinearExtension::from_order({0, 0}), InvalidExtension);
  EXPECT_THROW(LinearExtension::from_order({0, 2}), InvalidExtension);
  const auto le = LinearExtension::from_order({2, 1, 0});
  EXPECT_FALSE(le.respects(chain(3)));
  EXPECT_THROW(require_extension(chain(3), le), InvalidExtension);
  EXPECT_NO_THROW(require_extension(antichain(3), le));
}

TEST(CoverRelation, Chain) {
  const ExtendedPoset ep = cover_relation(chain(3));
  EXPECT_TRUE(ep.covers(ep.bottom(), 0));
  EXPECT_TRUE(ep.covers(0, 1));
  EXPECT_TRUE(ep.covers(1, 2));
  EXPECT_TRUE(ep.covers(2, ep.top()));
  EXPECT_FALSE(ep.covers(0, 2));
  EXPECT_EQ(ep.cover_count(), 4u);
}

TEST(CoverRelation, Antichain) {
  const ExtendedPoset ep = cover_relation(antichain(3));
  for (Element v = 0; v < 3; ++v) {
    EXPECT_EQ(list(ep.cover_predecessors(v)), (Elems{ep.bottom()}));
  }
  EXPECT_EQ(list(ep.cover_predecessors(ep.top())), (Elems{0, 1, 2}));
  EXPECT_FALSE(ep.covers(ep.bottom(), ep.top()));
  EXPECT_TRUE(ep.cover_predecessors(ep.bottom()).empty());
}

TEST(CoverRelation, PathPosetMatchesBetweennessCheck) {
  const Poset p = path_poset(4);
  std::vector<Arc> expected;
  for (Element v = 0; v < 4; ++v) {
    for (Element u = 0; u < 4; ++u) {
      if (testing::is_cover_by_definition(p, u, v)) expected.emplace_back(u, v);
    }
  }
  EXPECT_EQ(expected, (std::vector<Arc>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(cover_relation(p).base_cover_arcs(), expected);
}

TEST(CoverRelation, EmptyPosetHasBottomBelowTop) {
  const ExtendedPoset ep = cover_relation(Poset{});
  EXPECT_EQ(ep.bottom(), 0u);
  EXPECT_EQ(ep.top(), 1u);
  EXPECT_TRUE(ep.covers(ep.bottom(), ep.top()));
  EXPECT_EQ(ep.cover_count(), 1u);
}

TEST(CoverRelation, ExtendedOrder) {
  const ExtendedPoset ep = cover_relation(path_poset(4));
  EXPECT_TRUE(ep.precedes(ep.bottom(), ep.top()));
  EXPECT_TRUE(ep.precedes(ep.bottom(), 1));
  EXPECT_TRUE(ep.precedes(2, ep.top()));
  EXPECT_FALSE(ep.precedes(ep.top(), 2));
  EXPECT_TRUE(ep.precedes(0, 2));
  EXPECT_FALSE(ep.precedes(0, 1));
}

TEST(CheckChain, NonTightChain) {
  const Elems s{0, 2};
  const ChainVerdict v = check_chain(chain(3), s);
  EXPECT_TRUE(v.is_chain);
  EXPECT_FALSE(v.is_tight);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (std::pair<Element, Element>{0, 2}));
}

TEST(CheckChain, EmptySet) {
  const ChainVerdict nonempty = check_chain(chain(3), {});
  EXPECT_TRUE(nonempty.is_chain);
  EXPECT_FALSE(nonempty.is_tight);
  const ChainVerdict empty = check_chain(Poset{}, {});
  EXPECT_TRUE(empty.is_chain);
  EXPECT_TRUE(empty.is_tight);
}

TEST(CheckChain, TightChainInPathPoset) {
  const Elems s{0, 2};
  const ChainVerdict v = check_chain(path_poset(4), s);
  EXPECT_TRUE(v.is_chain);
  EXPECT_TRUE(v.is_tight);
  EXPECT_FALSE(v.witness);
}

TEST(CheckChain, IncomparablePairIsWitnessed) {
  const Elems s{2, 0, 1};
  const ChainVerdict v = check_chain(path_poset(4), s);
  EXPECT_FALSE(v.is_chain);
  EXPECT_FALSE(v.is_tight);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(path_poset(4).comparable(v.witness->first, v.witness->second));
  const Elems bad{7};
  EXPECT_THROW(check_chain(path_poset(4), bad), ElementOutOfRange);
}

// --- properties on random posets --------------------------------------------

class RandomPosets : public ::testing::TestWithParam<double> {};

TEST_P(RandomPosets, ClosureAndReductionRoundTrip) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const Poset p = oracle::random_poset({n, GetParam(), seed});
    ASSERT_FALSE(find_poset_violation(p)) << *find_poset_violation(p);

    const auto pairs = p.relation_arcs();
    EXPECT_EQ(poset_from_arcs(n, pairs), p);

    const ExtendedPoset ep = cover_relation(p);
    const auto covers = ep.base_cover_arcs();
    EXPECT_EQ(poset_from_arcs(n, covers), p);
    for (const auto& [u, v] : covers) {
      EXPECT_TRUE(testing::is_cover_by_definition(p, u, v));
    }

    const LinearExtension le = linear_extension(p);
    EXPECT_TRUE(le.respects(p));
  }
}

TEST_P(RandomPosets, ChainsAreIndependentSetsAndTightChainsMaximalOnes) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const Poset p = oracle::random_poset({n, GetParam(), seed});
    const Graph g = incomparability_graph(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto s = testing::members(mask);
      const ChainVerdict v = check_chain(p, s);
      ASSERT_EQ(v.is_chain, oracle::is_independent(g, s)) << "mask " << mask;
      ASSERT_EQ(v.is_tight, oracle::is_maximal_independent(g, s))
          << "mask " << mask;
      if (v.is_tight) ASSERT_TRUE(v.is_chain);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Densities, RandomPosets,
                         ::testing::Values(0.1, 0.3, 0.5, 0.8));

}  // namespace
}  // namespace posetcount
