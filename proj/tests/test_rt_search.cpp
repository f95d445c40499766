#include <gtest/gtest.h>

#include <random>

#include "rtd/canonical.hpp"
#include "rtd/clique.hpp"
#include "rtd/constructions.hpp"
#include "rtd/errors.hpp"
#include "rtd/rt_search.hpp"
#include "rtd/verify.hpp"
#include "support/oracles.hpp"

namespace rtd {
namespace {

TEST(FindFreeColoring, K5IsPentagonlike) {
  const auto r = find_free_coloring(Graph::complete(5), 3, 3);
  ASSERT_TRUE(r.coloring.has_value());
  const auto cg = ColoredGraph::from(Graph::complete(5), *r.coloring);
  for (int c = 1; c <= 2; ++c) {
    const Graph& g = cg.color_class(c);
    EXPECT_EQ(g.edge_count(), 5);
    for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
  }
}

TEST(FindFreeColoring, K6IsExhaustedWithoutSolution) {
  const auto r = find_free_coloring(Graph::complete(6), 3, 3);
  EXPECT_FALSE(r.coloring.has_value());
  EXPECT_TRUE(r.exhausted);
  EXPECT_LE(r.nodes, 1 << 15);
}

TEST(FindFreeColoring, K3SplitsColours) {
  const auto r = find_free_coloring(Graph::complete(3), 3, 3);
  ASSERT_TRUE(r.coloring.has_value());
  int ones = 0;
  for (const auto& e : *r.coloring) ones += e.color == 1;
  EXPECT_TRUE(ones == 1 || ones == 2);
}

TEST(FindFreeColoring, BudgetValidation) {
  EXPECT_THROW(find_free_coloring(Graph::complete(3), 3, 3, 0), ArgumentError);
  const auto r = find_free_coloring(Graph::complete(6), 3, 3, 3);
  EXPECT_FALSE(r.exhausted);
}

TEST(FindFreeColoring, AgreesWithNaiveEnumeration) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_graphs_up_to_isomorphism(n))
      for (auto [p, q] : {std::pair{2, 3}, {3, 3}, {3, 2}, {2, 4}, {3, 4}}) {
        const auto r = find_free_coloring(g, p, q);
        ASSERT_TRUE(r.exhausted);
        ASSERT_EQ(r.coloring.has_value(), testing::naive_free_coloring_exists(g, p, q));
        if (r.coloring)
          ASSERT_TRUE(check_colored_free(ColoredGraph::from(g, *r.coloring), p, q).passed());
      }
}

TEST(FindFreeColoring, SwapSymmetry) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(7 + static_cast<int>(rng() % 3), 0.7, rng);
    for (auto [p, q] : {std::pair{3, 4}, {2, 5}, {3, 3}}) {
      const auto a = find_free_coloring(g, p, q);
      const auto b = find_free_coloring(g, q, p);
      ASSERT_TRUE(a.exhausted && b.exhausted);
      ASSERT_EQ(a.coloring.has_value(), b.coloring.has_value());
    }
  }
}

// Every 5-vertex graph embeds in K5, so restricting a census survivor to its
// edges yields a free colouring; the solver must find one for all 34 classes.
TEST(FindFreeColoring, AllFiveVertexClassesColourable) {
  const std::array<int, 5> id{0, 1, 2, 3, 4};
  const auto survivor = pentagonlike(id);
  const auto classes = all_graphs_up_to_isomorphism(5);
  ASSERT_EQ(classes.size(), 34u);
  for (const Graph& g : classes) {
    ColoredGraph restricted(5);
    for (auto [u, v] : g.edges()) restricted.set_edge(u, v, survivor.color(u, v));
    ASSERT_TRUE(check_colored_free(restricted, 3, 3).passed());
    ASSERT_TRUE(find_free_coloring(g, 3, 3).coloring.has_value());
  }
}

TEST(RtExact, Examples) {
  const auto r5 = rt_exact({5, 3, 3, 1});
  ASSERT_TRUE(r5.value.has_value());
  EXPECT_EQ(*r5.value, 10);
  ASSERT_TRUE(r5.witness.has_value());
  EXPECT_TRUE(check_rt_witness(*r5.witness, 3, 3, 1).passed());

  const auto r6 = rt_exact({6, 3, 3, 1});
  EXPECT_FALSE(r6.value.has_value());
  EXPECT_TRUE(r6.exhausted);

  const auto r3 = rt_exact({3, 3, 3, 1});
  ASSERT_TRUE(r3.value.has_value());
  EXPECT_EQ(*r3.value, 3);
  EXPECT_TRUE(check_rt_witness(*r3.witness, 3, 3, 1).passed());
}

// Oracle: scan every graph class for alpha <= m and a naive free colouring.
std::optional<std::int64_t> naive_rt(int n, int p, int q, int m) {
  std::optional<std::int64_t> best;
  for (const Graph& g : all_graphs_up_to_isomorphism(n)) {
    if (testing::naive_independence_number(g) > m) continue;
    if (best && g.edge_count() <= *best) continue;
    if (testing::naive_free_coloring_exists(g, p, q)) best = g.edge_count();
  }
  return best;
}

TEST(RtExact, AgreesWithNaiveSweep) {
  for (int n = 2; n <= 5; ++n)
    for (int q = 3; q <= 4; ++q)
      for (int m = 1; m <= 3; ++m) {
        const auto r = rt_exact({n, 3, q, m});
        ASSERT_TRUE(r.exhausted);
        ASSERT_EQ(r.value, naive_rt(n, 3, q, m)) << n << "," << q << "," << m;
        if (r.witness) {
          ASSERT_TRUE(check_rt_witness(*r.witness, 3, q, m).passed());
          ASSERT_EQ(r.witness->underlying().edge_count(), *r.value);
        }
      }
}

TEST(RtExact, MonotoneInCapAndQ) {
  for (int n = 3; n <= 6; ++n) {
    std::int64_t prev_q = -1;
    for (int q = 3; q <= 5; ++q) {
      std::int64_t prev_m = -1;
      for (int m = 1; m <= 3; ++m) {
        const auto r = rt_exact({n, 3, q, m});
        ASSERT_TRUE(r.exhausted);
        const std::int64_t v = r.value.value_or(-1);
        EXPECT_GE(v, prev_m) << n << "," << q << "," << m;
        prev_m = v;
        if (m == 2) {
          EXPECT_GE(v, prev_q) << n << "," << q;
          prev_q = v;
        }
      }
    }
  }
}

TEST(RamseyVerify, Examples) {
  EXPECT_TRUE(ramsey_verify(3, 3, 5));
  EXPECT_FALSE(ramsey_verify(3, 3, 6));
  for (int q = 2; q <= 5; ++q)
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(ramsey_verify(2, q, n), n < q);
  EXPECT_THROW(ramsey_verify(3, 3, 6, 2), BudgetExhausted);
}

}  // namespace
}  // namespace rtd
