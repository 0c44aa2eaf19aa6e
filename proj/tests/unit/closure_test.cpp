#include <gtest/gtest.h>

#include "../support.hpp"
#include "lplab/closure.hpp"
#include "lplab/constructions.hpp"
#include "lplab/error.hpp"

namespace lplab {
namespace {

using test::fix_b;
using test::fix_c;
using test::q;

TEST(Closure, UniverseDeduplicatesIsomorphicPairs) {
  Universe u;
  const ModelDataPair b1(fix_b(), "y1");
  const FiniteModel swapped({"t1", "t2"}, {"u", "v"}, {q({"1/2", "1/2"}), q({"3/4", "1/4"})});
  EXPECT_EQ(u.insert(b1), 0u);
  EXPECT_EQ(u.insert(ModelDataPair(swapped, "v")), 0u);
  EXPECT_EQ(u.insert(ModelDataPair(fix_b(), "y2")), 1u);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u.find(ModelDataPair(swapped, "u")), 1u);
  EXPECT_FALSE(u.find(ModelDataPair(fix_c(), "z1")));
  const FiniteModel other({"a", "b"}, {"y1", "y2"}, {q({"1/2", "1/2"}), q({"1/4", "3/4"})});
  EXPECT_THROW(u.insert(ModelDataPair(other, 0)), Error);
}

TEST(Closure, SingletonUniverse) {
  const Universe u({ModelDataPair(fix_b(), "y1")});
  for (auto k : {RelationKind::S, RelationKind::C, RelationKind::L, RelationKind::SOrC, RelationKind::DurbinC}) {
    EXPECT_EQ(closure(u, k).classes().size(), 1u);
  }
}

TEST(Closure, BirnbaumAugmentationConnects) {
  const ModelDataPair b2(fix_b(), "y2");
  const ModelDataPair c1(fix_c(), "z1");
  Universe u({b2, c1});
  EXPECT_EQ(closure(u, RelationKind::SOrC).classes().size(), 2u);
  EXPECT_EQ(closure(u, RelationKind::L).classes().size(), 1u);

  const BirnbaumMixture mix = birnbaumize(b2, c1);
  u.insert(mix.first);
  u.insert(mix.second);
  const ClosureResult r = closure(u, RelationKind::SOrC);
  ASSERT_EQ(r.classes().size(), 1u);
  const auto chain = r.chain(*u.find(b2), *u.find(c1));
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->steps.size(), 3u);
  EXPECT_TRUE(verify_chain(*chain));
  EXPECT_TRUE(pairs_isomorphic(chain->nodes.front(), b2));
  EXPECT_TRUE(pairs_isomorphic(chain->nodes.back(), c1));
  const auto reverse = r.chain(*u.find(c1), *u.find(b2));
  ASSERT_TRUE(reverse);
  EXPECT_TRUE(verify_chain(*reverse));
}

TEST(Closure, ClassesMatchBruteForceReachability) {
  const auto pairs = enumerate_pairs(ModelGrid{2, 1, 3, 2});
  const Universe u(pairs);
  for (auto kind : {RelationKind::S, RelationKind::C, RelationKind::SOrC}) {
    const ClosureResult r = closure(u, kind);
    const std::size_t n = u.size();
    // Warshall on the symmetrized relation.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool rel = kind == RelationKind::S    ? test::oracle_s(u[i], u[j])
                         : kind == RelationKind::C ? test::oracle_c(u[i], u[j])
                                                   : test::oracle_s(u[i], u[j]) || test::oracle_c(u[i], u[j]);
        reach[i][j] = reach[i][j] || rel || i == j;
        reach[j][i] = reach[j][i] || rel || i == j;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!reach[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || reach[k][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(r.class_of(i) == r.class_of(j), static_cast<bool>(reach[i][j]));
        if (i < j && reach[i][j] && (i * 7 + j) % 5 == 0) {
          const auto chain = r.chain(i, j);
          ASSERT_TRUE(chain);
          EXPECT_TRUE(verify_chain(*chain));
          for (std::size_t s = 0; s < chain->steps.size(); ++s) {
            EXPECT_TRUE(test::oracle_check_step(chain->nodes[s], chain->nodes[s + 1], chain->steps[s]));
          }
        }
      }
    }
  }
}

TEST(Closure, PropertiesReport) {
  const Universe grid(enumerate_pairs(ModelGrid{2, 1, 3, 2}));
  for (auto kind : {RelationKind::S, RelationKind::L}) {
    const auto rep = relation_properties_report(grid, kind);
    EXPECT_TRUE(rep.reflexive.holds && rep.symmetric.holds && rep.transitive.holds) << to_string(kind);
  }
  const auto t = test::frozen_c_triple();
  const Universe u({t.first, t.middle, t.last});
  const auto rep = relation_properties_report(u, RelationKind::C);
  EXPECT_TRUE(rep.reflexive.holds);
  EXPECT_TRUE(rep.symmetric.holds);
  EXPECT_FALSE(rep.transitive.holds);
  ASSERT_FALSE(rep.transitive.counterexamples.empty());
  const auto [a, b, c] = rep.transitive.counterexamples.front();
  EXPECT_TRUE(c_related(u[a], u[b]));
  EXPECT_TRUE(c_related(u[b], u[c]));
  EXPECT_FALSE(c_related(u[a], u[c]));
}

}  // namespace
}  // namespace lplab
