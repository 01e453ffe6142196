#include "bitroute/graph.hpp"

#include "bitroute/errors.hpp"
#include "oracles.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

namespace bitroute
{
namespace
{

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::desk_edges;
using testing::desk_graph;
using testing::RawGraph;

// ----------------------------------------------------------------------------
// build / neighbors
// ----------------------------------------------------------------------------

TEST(GraphBuild, DeskFixtureRowsAndNeighbors)
{
    const auto g = desk_graph();
    EXPECT_EQ(g.node_count(), 5U);
    EXPECT_THAT(g.neighbors(1), ElementsAre(3, 4));
    EXPECT_THAT(g.neighbors(4), ElementsAre(1, 2, 5));
    // row 1 is 0 0 1 1 0: the second set cell sits in column 4
    for (NodeId j = 1; j <= 5; ++j)
    {
        EXPECT_EQ(g.adjacent(1, j), j == 3 || j == 4) << j;
    }
}

TEST(GraphBuild, SingleIsolatedNode)
{
    const auto g = Graph::build(1, {});
    EXPECT_TRUE(g.is_alive(1));
    EXPECT_TRUE(g.neighbors(1).empty());
    EXPECT_EQ(g.degree(1), 0U);
}

TEST(GraphBuild, TwoNodesAreSymmetric)
{
    const std::vector<EdgeSpec> edges{{1, 2, 1.0}};
    const auto g = Graph::build(2, edges);
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(1, 1));
    EXPECT_FALSE(g.adjacent(2, 2));
    EXPECT_EQ(g.weight(2, 1), 1.0);
}

TEST(GraphBuild, RejectsBadEdgesNamingThePair)
{
    const std::vector<EdgeSpec> loop{{2, 2, 1.0}};
    const std::vector<EdgeSpec> range{{1, 6, 1.0}};
    const std::vector<EdgeSpec> dup{{1, 2, 1.0}, {2, 1, 1.0}};
    const std::vector<EdgeSpec> weight{{1, 2, 0.0}};

    auto message = [](const std::vector<EdgeSpec>& edges) {
        try
        {
            Graph::build(5, edges);
        }
        catch (const GraphError& e)
        {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_THAT(message(loop), HasSubstr("(2,2)"));
    EXPECT_THAT(message(range), HasSubstr("(1,6)"));
    EXPECT_THAT(message(dup), HasSubstr("(2,1)"));
    EXPECT_THAT(message(weight), HasSubstr("weight"));
    EXPECT_THROW(Graph::build(0, {}), GraphError);
}

TEST(GraphBuild, NeighborsOfDeadOrUnknownNodeThrow)
{
    auto g = desk_graph();
    EXPECT_THROW(g.neighbors(6), GraphError);
    g.remove_node(3);
    try
    {
        g.neighbors(3);
        FAIL();
    }
    catch (const GraphError& e)
    {
        EXPECT_THAT(e.what(), HasSubstr("3"));
    }
}

// ----------------------------------------------------------------------------
// index_edge / index_vertex
// ----------------------------------------------------------------------------

TEST(EdgeOrdinals, SecondEdgeOfNodeOneIsNodeFour)
{
    const auto g = desk_graph();
    EXPECT_EQ(g.index_edge(1, 4), 2U);
    const auto scan = g.scan_vertex(1, 2);
    EXPECT_EQ(scan.vertex, 4U);
    EXPECT_EQ(scan.comparisons, 4U);
}

TEST(EdgeOrdinals, SoleNeighborIsRankOne)
{
    const auto g = desk_graph();
    EXPECT_EQ(g.index_edge(2, 4), 1U);
    EXPECT_EQ(g.index_vertex(2, 1), 4U);
}

TEST(EdgeOrdinals, NonAdjacentPairThrowsWithBothIds)
{
    const auto g = desk_graph();
    try
    {
        g.index_edge(1, 2);
        FAIL();
    }
    catch (const GraphError& e)
    {
        EXPECT_THAT(e.what(), HasSubstr("(1,2)"));
    }
}

TEST(EdgeOrdinals, OrdinalBeyondDegreeThrowsWithDegree)
{
    const auto g = desk_graph();
    try
    {
        g.index_vertex(4, 4);
        FAIL();
    }
    catch (const GraphError& e)
    {
        EXPECT_THAT(e.what(), HasSubstr("node 4 has no edge 4 (degree 3)"));
    }
    EXPECT_THROW(g.index_vertex(4, 0), GraphError);
}

TEST(EdgeOrdinals, BijectionOnAllGraphsUpToFiveNodes)
{
    for (std::size_t n = 1; n <= 5; ++n)
    {
        testing::for_each_graph(n, [&](const std::vector<EdgeSpec>& edges) {
            const auto g = Graph::build(n, edges);
            const RawGraph raw(n, edges);
            for (NodeId i = 1; i <= n; ++i)
            {
                const auto degree = g.degree(i);
                for (EdgeOrdinal k = 1; k <= degree; ++k)
                {
                    ASSERT_EQ(g.index_edge(i, g.index_vertex(i, k)), k);
                }
                for (NodeId j = 1; j <= n; ++j)
                {
                    if (raw.adj(i, j))
                    {
                        const auto k = g.index_edge(i, j);
                        ASSERT_EQ(k, testing::rank_oracle(raw, i, j));
                        ASSERT_LE(k, degree);
                        ASSERT_EQ(g.index_vertex(i, k), j);
                    }
                }
            }
        });
    }
}

TEST(EdgeOrdinals, RankOracleOnRandomGraphs)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t n = 2 + trial % 49;
        const auto edges = testing::random_edges(rng, n, 0.2, false);
        const auto g = Graph::build(n, edges);
        const RawGraph raw(n, edges);
        for (NodeId i = 1; i <= n; ++i)
        {
            for (NodeId j = 1; j <= n; ++j)
            {
                if (raw.adj(i, j))
                {
                    ASSERT_EQ(g.index_edge(i, j), testing::rank_oracle(raw, i, j));
                    ASSERT_EQ(g.index_vertex(i, g.index_edge(i, j)), j);
                }
            }
        }
    }
}

// ----------------------------------------------------------------------------
// remove_node / add_node
// ----------------------------------------------------------------------------

TEST(RemoveNode, ReturnsFormerNeighbors)
{
    auto g = desk_graph();
    EXPECT_THAT(g.remove_node(4), ElementsAre(1, 2, 5));
    EXPECT_THAT(g.neighbors(1), ElementsAre(3));
    EXPECT_FALSE(g.is_alive(4));
    EXPECT_EQ(g.node_count(), 5U);
    EXPECT_EQ(g.alive_count(), 4U);
    EXPECT_THROW(g.remove_node(4), GraphError);
}

TEST(RemoveNode, NodeThreeLeavesGraphConnectedThroughFour)
{
    auto g = desk_graph();
    EXPECT_THAT(g.remove_node(3), ElementsAre(1, 5));
    const auto remaining = g.edges();
    // 4 alive nodes {1,2,4,5} plus the dead id 3 as its own component
    EXPECT_EQ(testing::component_count(5, remaining), 2U);
}

TEST(RemoveNode, OnlyNodeOfSingletonGraph)
{
    auto g = Graph::build(1, {});
    EXPECT_TRUE(g.remove_node(1).empty());
    EXPECT_EQ(g.alive_count(), 0U);
}

TEST(RemoveNode, LeavesOtherPairsUntouched)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const std::size_t n = 3 + trial % 20;
        const auto edges = testing::random_edges(rng, n, 0.3, false);
        auto g = Graph::build(n, edges);
        const RawGraph raw(n, edges);
        const NodeId v = 1 + static_cast<NodeId>(rng() % n);
        g.remove_node(v);
        for (NodeId i = 1; i <= n; ++i)
        {
            for (NodeId j = 1; j <= n; ++j)
            {
                const bool expected = i != v && j != v && raw.adj(i, j);
                ASSERT_EQ(g.adjacent(i, j), expected);
            }
        }
    }
}

TEST(AddNode, TakesNextIdAndLinksSymmetrically)
{
    auto g = desk_graph();
    g.remove_node(4);
    const std::vector<NodeId> links{1, 2};
    g.add_node(6, links);
    EXPECT_EQ(g.node_count(), 6U);
    EXPECT_THAT(g.neighbors(6), ElementsAre(1, 2));
    EXPECT_THAT(g.neighbors(1), ElementsAre(3, 6));
    EXPECT_FALSE(g.is_alive(4));

    const std::vector<NodeId> dead{4};
    EXPECT_THROW(g.add_node(7, dead), GraphError);
    EXPECT_THROW(g.add_node(9, links), GraphError);
}

} // namespace
} // namespace bitroute
