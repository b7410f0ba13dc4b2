#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "heavypath/path.hpp"
#include "support.hpp"

using namespace heavypath;
using testing_support::random_graph;

namespace {

// a=0, b=1, c=2, d=3 on a small weighted graph.
WeightedGraph abcd() {
    return WeightedGraph(4, {{0, 1, 0.9}, {1, 2, 0.5}, {0, 2, 0.3}, {2, 3, 0.25}});
}

std::vector<NodeId> seq(const Path& p) { return {p.nodes().begin(), p.nodes().end()}; }

}  // namespace

TEST(Canonical, ReversesToLexicographicMinimum) {
    auto g = abcd();
    auto p = Path::from_nodes(g, {2, 1, 0});
    EXPECT_EQ(seq(canonical(p)), (std::vector<NodeId>{0, 1, 2}));
    auto q = Path::from_nodes(g, {0, 1, 2});
    EXPECT_EQ(seq(canonical(q)), (std::vector<NodeId>{0, 1, 2}));
    EXPECT_EQ(canonical(p).weight(), p.weight());
}

TEST(Canonical, IdempotentOnRandomPaths) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = random_graph(seed, 8, 0.7, false);
        for (std::size_t l = 1; l <= 4; ++l) {
            for (const auto& op : testing_support::oracle_paths(g, l)) {
                std::vector<NodeId> rev(op.nodes.rbegin(), op.nodes.rend());
                auto p = Path::from_nodes(g, rev);
                auto c = canonical(p);
                EXPECT_EQ(canonical(c), c);
                EXPECT_EQ(seq(c), op.nodes);
                // Orientation invariance and bit-exact recomputation.
                EXPECT_EQ(p.weight(), op.weight);
                EXPECT_EQ(c.weight(), canonical_weight(g, c.nodes()));
            }
        }
    }
}

TEST(Path, RejectsNonSimpleOrNonAdjacent) {
    auto g = abcd();
    EXPECT_THROW(Path::from_nodes(g, {0, 1, 0}), GraphError);
    EXPECT_THROW(Path::from_nodes(g, {0, 3}), GraphError);
    EXPECT_THROW(Path::from_nodes(g, {0}), GraphError);
}

TEST(Extend, AppendsAtEitherEnd) {
    auto g = abcd();
    auto ab = Path::from_nodes(g, {0, 1});
    auto abc = extend(g, ab, g.edge(*g.find_edge(1, 2)), End::right);
    ASSERT_TRUE(abc);
    EXPECT_EQ(seq(*abc), (std::vector<NodeId>{0, 1, 2}));
    EXPECT_EQ(abc->weight(), 0.9 + 0.5);
    auto cab = extend(g, ab, g.edge(*g.find_edge(0, 2)), End::left);
    ASSERT_TRUE(cab);
    EXPECT_EQ(seq(*cab), (std::vector<NodeId>{2, 0, 1}));
}

TEST(Extend, RejectsCycle) {
    auto g = abcd();
    auto abc = Path::from_nodes(g, {0, 1, 2});
    EXPECT_FALSE(extend(g, abc, g.edge(*g.find_edge(0, 2)), End::right));
}

TEST(Extend, ThrowsWhenEdgeNotIncident) {
    auto g = abcd();
    auto ab = Path::from_nodes(g, {0, 1});
    EXPECT_THROW(extend(g, ab, g.edge(*g.find_edge(2, 3)), End::right), GraphError);
}

TEST(Extend, FanHeavyPathWeight) {
    auto g = generate_fig3(2);
    auto abc = Path::from_nodes(g, {0, 1, 2});
    EXPECT_EQ(abc.weight(), 2.0);
    auto abcd = extend(g, abc, g.edge(*g.find_edge(2, 3)), End::right);
    ASSERT_TRUE(abcd);
    EXPECT_EQ(abcd->weight(), 2.001);
}

TEST(Extend, NeverRepeatsNodesAndWeightIsCanonical) {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = random_graph(seed, 9, 0.5, false);
        if (g.edge_count() == 0) continue;
        for (int trial = 0; trial < 20; ++trial) {
            Path p = Path::from_edge(g.edge(rng() % g.edge_count()));
            for (int step = 0; step < 6; ++step) {
                End end = rng() % 2 ? End::left : End::right;
                auto nbrs = g.neighbors(p.end_node(end));
                const Neighbor& nb = nbrs[rng() % nbrs.size()];
                auto q = extend(g, p, nb.node, end, nb.weight);
                if (!q) {
                    EXPECT_TRUE(p.contains(nb.node));
                    continue;
                }
                std::vector<NodeId> s = seq(*q);
                std::sort(s.begin(), s.end());
                EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
                EXPECT_EQ(q->weight(), canonical_weight(g, q->nodes()));
                EXPECT_EQ(q->length(), p.length() + 1);
                p = *q;
            }
        }
    }
}

TEST(PathBuffer, DuplicateUnderReversal) {
    auto g = abcd();
    PathBuffer b(2);
    EXPECT_EQ(b.insert(Path::from_nodes(g, {0, 1, 2})), InsertOutcome::inserted);
    EXPECT_EQ(b.insert(Path::from_nodes(g, {2, 1, 0})), InsertOutcome::duplicate);
    EXPECT_EQ(b.size(), 1u);
}

TEST(PathBuffer, LengthMismatch) {
    auto g = abcd();
    PathBuffer b(2);
    EXPECT_THROW(b.insert(Path::from_nodes(g, {0, 1})), std::invalid_argument);
}

TEST(PathBuffer, TopScoreAndOrderedRemoval) {
    WeightedGraph g(6, {{0, 1, 1.0}, {2, 3, 3.0}, {4, 5, 2.0}});
    PathBuffer b(1);
    EXPECT_EQ(b.top_score(), -std::numeric_limits<double>::infinity());
    for (const Edge& e : g.edges()) b.insert(Path::from_edge(e));
    EXPECT_EQ(b.top_score(), 3.0);
    EXPECT_EQ(b.remove_top().weight(), 3.0);
    EXPECT_EQ(b.top_score(), 2.0);
    b.remove_top();
    b.remove_top();
    EXPECT_TRUE(b.empty());
    EXPECT_EQ(b.top_score(), -std::numeric_limits<double>::infinity());
    EXPECT_THROW(b.remove_top(), std::out_of_range);
}

TEST(PathBuffer, EqualWeightsTieBreakBySequence) {
    WeightedGraph g(4, {{0, 1, 2.0}, {2, 3, 2.0}});
    PathBuffer b(1);
    b.insert(Path::from_edge(g.edge(1)));
    b.insert(Path::from_edge(g.edge(0)));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(seq(b.remove_top()), (std::vector<NodeId>{0, 1}));
}

TEST(PathBuffer, TotalOrderOverRandomInsertions) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto g = random_graph(seed, 8, 0.6, false, 0.25);
        auto all = testing_support::oracle_paths(g, 3);
        std::shuffle(all.begin(), all.end(), rng);
        PathBuffer b(3);
        for (const auto& op : all) b.insert(Path::from_nodes(g, op.nodes));
        ASSERT_EQ(b.size(), all.size());
        RankOrder less;
        for (auto it = b.begin(); it != b.end(); ++it) {
            auto nx = std::next(it);
            if (nx == b.end()) break;
            EXPECT_TRUE(less(*it, *nx));
            EXPECT_FALSE(less(*nx, *it));
        }
        if (!b.empty()) {
            EXPECT_EQ(b.top_score(), b.begin()->weight());
        }
    }
}

TEST(FormatPath, WeightTabLabels) {
    auto g = testing_support::six_node_graph();
    auto ids = testing_support::ids_of(g, {"6", "1", "2", "3", "4"});
    auto p = Path::from_nodes(g, ids);
    std::string s = format_path(g, p);
    EXPECT_EQ(s.substr(s.find('\t') + 1), "4,3,2,1,6");
    EXPECT_EQ(std::stod(s.substr(0, s.find('\t'))), p.weight());
}
