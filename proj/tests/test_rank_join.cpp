#include <gtest/gtest.h>

#include "heavypath/rank_join.hpp"
#include "support.hpp"

using namespace heavypath;
using testing_support::as_oracle;
using testing_support::six_node_graph;
using testing_support::oracle_paths;
using testing_support::oracle_topk;
using testing_support::random_graph;

TEST(RankJoin, SixNodeScansEveryEdge) {
    auto g = six_node_graph();
    auto s = sorted_edges(g);
    ThresholdTrace trace(true);
    RankJoinOptions opt;
    opt.trace = &trace;
    auto r = rank_join_topk(s, 4, 1, opt);
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_EQ(r.metrics.depth, 15u);
    EXPECT_FALSE(r.stopped_by_threshold);
    ASSERT_EQ(trace.rows().size(), 15u);
    EXPECT_EQ(trace.rows()[3].theta, 0.77 + (4 - 1) * 0.93);
    EXPECT_EQ(r.theta, 0.58 + (4 - 1) * 0.93);
    EXPECT_GT(r.theta, r.paths[0].weight());
    EXPECT_EQ(rank_join_depth_probe(s, 4), 15u);
}

TEST(RankJoin, FanJoinCount) {
    for (std::size_t n : {1u, 2u, 10u, 57u}) {
        auto g = generate_fig3(n);
        auto r = rank_join_topk(sorted_edges(g), 3, 1);
        ASSERT_EQ(r.paths.size(), 1u);
        EXPECT_EQ(r.paths[0].weight(), 2.001);
        EXPECT_EQ(r.metrics.joins, 2 * n + 4);
        EXPECT_EQ(r.metrics.paths_constructed, n + 1);
        EXPECT_TRUE(r.stopped_by_threshold);
        EXPECT_EQ(r.metrics.depth, g.edge_count());
    }
}

TEST(RankJoin, ChainHaltsAtThresholdEquality) {
    const double w = 0.5;
    WeightedGraph g(5, {{0, 1, w}, {1, 2, w}, {2, 3, w}, {3, 4, w}});
    auto r = rank_join_topk(sorted_edges(g), 4, 1);
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_EQ(r.metrics.depth, 4u);
    EXPECT_EQ(r.theta, 4 * w);
    EXPECT_TRUE(r.stopped_by_threshold);
}

TEST(RankJoin, LengthOneStopsAtDepthOne) {
    auto g = six_node_graph();
    auto s = sorted_edges(g);
    EXPECT_EQ(rank_join_depth_probe(s, 1), 1u);
}

TEST(RankJoin, ExhaustedFlag) {
    WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto r = rank_join_topk(sorted_edges(g), 3, 2);
    EXPECT_TRUE(r.paths.empty());
    EXPECT_EQ(r.status, RunStatus::exhausted);
}

TEST(RankJoin, PathCapIsAResourceError) {
    auto g = six_node_graph();
    RankJoinOptions opt;
    opt.path_cap = 10;
    EXPECT_THROW(rank_join_topk(sorted_edges(g), 4, 1, opt), ResourceError);
}

TEST(RankJoin, MatchesOracle) {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto g = random_graph(seed, 3 + seed % 8, 0.5, seed % 2 == 0, seed % 2 ? 0.25 : 0.0);
        auto s = sorted_edges(g);
        for (std::size_t l = 1; l <= 5; ++l) {
            for (std::size_t k : {1u, 3u, 5u}) {
                auto r = rank_join_topk(s, l, k);
                auto got = as_oracle(r.paths);
                auto want = oracle_topk(g, l, k);
                ASSERT_EQ(got.size(), want.size()) << "seed " << seed << " l " << l;
                // A ">= theta" stop may retain a path weighing exactly theta while an
                // unread path of equal weight sorts before it.
                for (std::size_t i = 0; i < got.size(); ++i) {
                    ASSERT_EQ(got[i].weight, want[i].weight)
                        << "seed " << seed << " l " << l << " k " << k << " rank " << i;
                    if (!r.stopped_by_threshold || got[i].weight > r.theta) {
                        ASSERT_EQ(got[i].nodes, want[i].nodes)
                            << "seed " << seed << " l " << l << " k " << k << " rank " << i;
                    }
                }
            }
        }
    }
}

TEST(RankJoin, TieAtThresholdKeepsWeights) {
    // Path 0-1-2 weighs 2 and is complete after two reads, when theta = 1 + 1.
    // Path 2-3-4 also weighs 2 but is read later.
    WeightedGraph g(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
    auto s = sorted_edges(g);
    auto r = rank_join_topk(s, 2, 1);
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_TRUE(r.stopped_by_threshold);
    EXPECT_EQ(r.paths[0].weight(), 2.0);
    EXPECT_EQ(r.theta, 2.0);
}

TEST(RankJoin, ThresholdNonIncreasing) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = random_graph(seed, 9, 0.5, false);
        ThresholdTrace trace(true);
        RankJoinOptions opt;
        opt.trace = &trace;
        rank_join_topk(sorted_edges(g), 4, 3, opt);
        EXPECT_TRUE(testing_support::trace_non_increasing(trace.rows()));
    }
}

TEST(RankJoin, ConstructsEveryPathWhenTopIsBelowBound) {
    // Each simple path is constructed exactly once when the run cannot stop
    // before the last edge.
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        auto g = random_graph(seed, 8, 0.5, true);
        for (std::size_t l = 2; l <= 4; ++l) {
            auto all = oracle_paths(g, l);
            if (all.empty()) continue;
            const double bound = g.min_weight() + static_cast<double>(l - 1) * g.max_weight();
            if (!(all.front().weight < bound)) continue;
            ++checked;
            auto r = rank_join_topk(sorted_edges(g), l, 1);
            EXPECT_EQ(r.metrics.paths_constructed, all.size());
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(RankJoin, SeenPrefixCoversHeavyShorterPaths) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_graph(seed, 9, 0.5, true);
        auto s = sorted_edges(g);
        for (std::size_t l = 3; l <= 5; ++l) {
            auto r = rank_join_topk(s, l, 1);
            if (r.paths.empty()) continue;
            const double floor = r.paths[0].weight() - g.max_weight();
            for (const auto& op : oracle_paths(g, l - 1)) {
                if (op.weight < floor) break;
                for (std::size_t i = 0; i + 1 < op.nodes.size(); ++i) {
                    auto e = g.find_edge(op.nodes[i], op.nodes[i + 1]);
                    EXPECT_LE(s.depth_of(*e), r.metrics.depth);
                }
            }
        }
    }
}

TEST(RankJoin, DepthGrowsWithLength) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_graph(seed, 10, 0.5, false);
        auto s = sorted_edges(g);
        for (std::size_t l = 3; l <= 5; ++l) {
            EXPECT_GE(rank_join_depth_probe(s, l), rank_join_depth_probe(s, l - 1));
        }
    }
}

TEST(RankJoin, InvalidQuery) {
    auto g = six_node_graph();
    auto s = sorted_edges(g);
    EXPECT_THROW(rank_join_topk(s, 0, 1), std::invalid_argument);
    EXPECT_THROW(rank_join_topk(s, 2, 0), std::invalid_argument);
}
