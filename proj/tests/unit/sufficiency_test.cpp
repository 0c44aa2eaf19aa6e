#include <gtest/gtest.h>

#include "../support.hpp"
#include "lplab/error.hpp"
#include "lplab/sufficiency.hpp"

namespace lplab {
namespace {

using test::fix_a;
using test::fix_b;
using test::fix_c;
using test::fix_d;
using test::q;

TEST(Sufficiency, LikelihoodPartition) {
  EXPECT_EQ(likelihood_partition(fix_a()), Partition::from_blocks(3, {{0, 1}, {2}}));
  EXPECT_EQ(likelihood_partition(fix_d()), Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(likelihood_partition(fix_b()), Partition::discrete(2));
}

TEST(Sufficiency, IsSufficient) {
  EXPECT_TRUE(is_sufficient(fix_a(), Partition::from_blocks(3, {{0, 1}, {2}})));
  EXPECT_TRUE(is_sufficient(fix_a(), Partition::discrete(3)));
  EXPECT_FALSE(is_sufficient(fix_b(), Partition::trivial(2)));
  EXPECT_FALSE(is_sufficient(fix_a(), Partition::from_blocks(3, {{0}, {1, 2}})));
}

TEST(Sufficiency, InducedModel) {
  const FiniteModel g = statistic_induced_model(fix_d(), Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(g.row(0), q({"1/2", "1/2"}));
  EXPECT_EQ(g.row(1), q({"1/2", "1/2"}));
  const FiniteModel one = statistic_induced_model(fix_a(), Partition::trivial(3));
  EXPECT_EQ(one.space_size(), 1u);
  EXPECT_EQ(one.row(0), q({"1"}));
  EXPECT_EQ(one.row(1), q({"1"}));
  EXPECT_EQ(statistic_induced_model(fix_a(), Partition::discrete(3)).probs(), fix_a().probs());
}

TEST(Sufficiency, ReduceFixA) {
  const ModelDataPair p(fix_a(), "x1");
  const ReductionResult r = reduce_to_mss(p);
  EXPECT_EQ(r.reduced.model().row(0), q({"1/2", "1/2"}));
  EXPECT_EQ(r.reduced.model().row(1), q({"1/4", "3/4"}));
  EXPECT_EQ(r.reduced.observed(), 0u);
  EXPECT_EQ(r.theta_free_factor[0], Rational(1, 3));
  EXPECT_EQ(r.theta_free_factor[1], Rational(2, 3));
  EXPECT_EQ(r.theta_free_factor[2], Rational(1));
  EXPECT_EQ(r.partition, Partition::from_blocks(3, {{0, 1}, {2}}));
}

TEST(Sufficiency, ReductionFactorization) {
  // f_theta(x) = g_theta(T(x)) h(x) with h parameter-free, on random models.
  test::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const ModelDataPair p = test::random_pair(rng, test::uniform(rng, 2, 3), test::uniform(rng, 1, 6));
    const ReductionResult r = reduce_to_mss(p);
    const FiniteModel& m = p.model();
    for (std::size_t t = 0; t < m.theta_size(); ++t) {
      for (std::size_t x = 0; x < m.space_size(); ++x) {
        EXPECT_EQ(m.prob(t, x), r.reduced.model().prob(t, r.block_map[x]) * r.theta_free_factor[x]);
      }
    }
    EXPECT_EQ(r.block_map[p.observed()], r.reduced.observed());
    const test::OracleReduction o = test::oracle_reduce(p);
    EXPECT_TRUE(test::oracle_isomorphic(o.columns, o.observed, test::columns(r.reduced.model()),
                                        r.reduced.observed()));
    EXPECT_TRUE(pairs_isomorphic(reduce_to_mss(r.reduced).reduced, r.reduced));
  }
}

TEST(Sufficiency, SRelated) {
  EXPECT_TRUE(s_related(ModelDataPair(fix_a(), "x1"), ModelDataPair(fix_b(), "y1")));
  EXPECT_TRUE(s_related(ModelDataPair(fix_a(), "x2"), ModelDataPair(fix_a(), "x1")));
  EXPECT_FALSE(s_related(ModelDataPair(fix_b(), "y2"), ModelDataPair(fix_c(), "z1")));
  const FiniteModel other({"a", "b"}, {"y1", "y2"}, {q({"1/2", "1/2"}), q({"1/4", "3/4"})});
  EXPECT_THROW(s_related(ModelDataPair(fix_b(), 0), ModelDataPair(other, 0)), Error);
}

TEST(Sufficiency, SRelatedAgreesWithOracle) {
  const auto pairs = enumerate_pairs(ModelGrid{2, 1, 3, 3});
  test::Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto& a = pairs[test::uniform(rng, 0, pairs.size() - 1)];
    const auto& b = pairs[test::uniform(rng, 0, pairs.size() - 1)];
    EXPECT_EQ(s_related(a, b).has_value(), test::oracle_s(a, b));
  }
}

}  // namespace
}  // namespace lplab
