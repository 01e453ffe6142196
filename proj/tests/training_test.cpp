#include "bitroute/training.hpp"

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
using testing::desk_graph;
using testing::RawGraph;

Graph
diamond()
{
    const std::vector<EdgeSpec> edges{{1, 2, 1.0}, {1, 3, 1.0}, {2, 4, 1.0}, {3, 4, 1.0}};
    return Graph::build(4, edges);
}

TEST(Training, FirstSendDiscoversAndTrainsEveryRouteNode)
{
    Network net(desk_graph(), Backend::LinkState);
    const auto first = net.send_data(1, 2);
    EXPECT_TRUE(first.delivered());
    EXPECT_THAT(first.path, ElementsAre(1, 4, 2));
    EXPECT_EQ(first.data_hops, 2U);
    EXPECT_EQ(first.discoveries, 1U);
    EXPECT_FALSE(first.cache_hit);

    EXPECT_EQ(net.table(1).entry(2).bits(), 0b10U);
    EXPECT_EQ(net.table(4).entry(2).bits(), 0b10U);
    EXPECT_EQ(net.table(4).trained_count(), 1U);
    EXPECT_TRUE(net.table(3).entry(2).empty());
}

TEST(Training, RepeatAndRelaySendsAreCacheHits)
{
    Network net(desk_graph(), Backend::Flood);
    EXPECT_EQ(net.send_data(1, 2).control_messages, 8U);

    const auto again = net.send_data(1, 2);
    EXPECT_TRUE(again.cache_hit);
    EXPECT_EQ(again.discoveries, 0U);
    EXPECT_EQ(again.control_messages, 0U);
    EXPECT_THAT(again.path, ElementsAre(1, 4, 2));

    const auto relay = net.send_data(4, 2);
    EXPECT_TRUE(relay.cache_hit);
    EXPECT_THAT(relay.path, ElementsAre(4, 2));
}

TEST(Training, TrainReportsExistingEntry)
{
    Network net(desk_graph(), Backend::LinkState);
    const auto first = net.train(1, 2);
    EXPECT_TRUE(first.trained);
    EXPECT_EQ(first.discoveries, 1U);
    EXPECT_EQ(first.entries_written, 2U);
    const auto second = net.train(1, 2);
    EXPECT_TRUE(second.trained);
    EXPECT_EQ(second.discoveries, 0U);
    EXPECT_EQ(second.entries_written, 0U);
}

TEST(Training, SendUpdateStopsAtBrokenHop)
{
    Network net(desk_graph(), Backend::LinkState);
    EXPECT_EQ(net.send_update(Route{{3, 1, 4, 2}}), 3U);
    EXPECT_EQ(net.send_update(Route{{5, 3, 2}}), 1U);
    EXPECT_EQ(net.table(5).entry(2).bits(), 0b1U);
    EXPECT_TRUE(net.table(3).entry(2) == encode_edge(1));
}

TEST(Training, TrafficCountersFollowForwarding)
{
    Network net(desk_graph(), Backend::LinkState);
    net.send_data(1, 2);
    net.send_data(1, 2);
    net.send_data(4, 2);
    EXPECT_EQ(net.traffic_count(1, 2), 2U);
    EXPECT_EQ(net.traffic_count(4, 2), 3U);
    EXPECT_EQ(net.traffic_count(2, 2), 0U);
}

TEST(Training, SelfTransferIsTrivial)
{
    Network net(desk_graph(), Backend::LinkState);
    const auto r = net.send_data(3, 3);
    EXPECT_TRUE(r.delivered());
    EXPECT_EQ(r.data_hops, 0U);
    EXPECT_TRUE(r.cache_hit);
}

TEST(Training, UnreachableIsUndeliverable)
{
    const std::vector<EdgeSpec> edges{{1, 2, 1.0}};
    Network net(Graph::build(3, edges), Backend::Flood);
    const auto r = net.send_data(1, 3);
    EXPECT_FALSE(r.delivered());
    EXPECT_EQ(r.discoveries, 1U);
    EXPECT_EQ(r.control_messages, 1U);
    EXPECT_FALSE(r.cache_hit);
    EXPECT_THROW(net.send_data(1, 4), GraphError);
}

TEST(Training, LoopLeftInTablesIsCutOff)
{
    Network net(desk_graph(), Backend::LinkState);
    net.table(1).inject_mask(2, encode_edge(1)); // toward 3
    net.table(3).inject_mask(2, encode_edge(1)); // back toward 1
    const auto r = net.transfer_data(1, 2);
    EXPECT_FALSE(r.delivered());
    EXPECT_EQ(r.discoveries, 0U);
    EXPECT_EQ(r.path.size(), 5U);
}

TEST(Training, CorruptEntryIsRetrained)
{
    Network net(desk_graph(), Backend::LinkState);
    net.table(1).inject_mask(2, EdgeMask::from_bits(0b11));
    const auto r = net.send_data(1, 2);
    EXPECT_TRUE(r.delivered());
    EXPECT_EQ(r.discoveries, 1U);
    EXPECT_THAT(r.path, ElementsAre(1, 4, 2));
}

TEST(Training, MidPathRepairFromRelay)
{
    Network net(desk_graph(), Backend::LinkState);
    net.table(1).inject_mask(2, encode_edge(1));
    const auto r = net.send_data(1, 2);
    EXPECT_TRUE(r.delivered());
    EXPECT_EQ(r.discoveries, 1U);
    EXPECT_THAT(r.path, ElementsAre(1, 3, 1, 4, 2));
}

TEST(Training, SecondSendIsShortestOnRandomGraphs)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial)
    {
        const std::size_t n = 2 + trial % 25;
        const auto edges = testing::random_edges(rng, n, 0.2, true);
        const RawGraph raw(n, edges);
        for (auto backend : {Backend::LinkState, Backend::Flood})
        {
            Network net(Graph::build(n, edges), backend);
            for (int k = 0; k < 10; ++k)
            {
                const NodeId s = 1 + static_cast<NodeId>(rng() % n);
                const NodeId d = 1 + static_cast<NodeId>(rng() % n);
                if (s == d)
                {
                    continue;
                }
                net.send_data(s, d);
                const auto again = net.send_data(s, d);
                ASSERT_TRUE(again.delivered());
                ASSERT_EQ(again.discoveries, 0U);
                ASSERT_EQ(again.control_messages, 0U);
                ASSERT_EQ(again.data_hops, *testing::bfs_distance(raw, s, d));
            }
        }
    }
}

// ----------------------------------------------------------------------------
// churn
// ----------------------------------------------------------------------------

TEST(Churn, DepartureClearsFormerNeighbors)
{
    Network net(desk_graph(), Backend::LinkState);
    net.send_data(1, 2);
    net.send_data(3, 2);
    EXPECT_EQ(net.handle_departure(4), 3U);
    EXPECT_TRUE(net.table(1).entry(2).empty());
    EXPECT_EQ(net.table(1).trained_count(), 0U);
    EXPECT_EQ(net.table(5).trained_count(), 0U);
    // node 3 was not adjacent to 4; its stale entry survives until used
    EXPECT_FALSE(net.table(3).entry(2).empty());
    EXPECT_EQ(net.traffic_count(1, 2), 2U);
}

TEST(Churn, NoAlternateRouteIsUndeliverable)
{
    Network net(desk_graph(), Backend::LinkState);
    net.send_data(1, 2);
    net.handle_departure(4);
    const auto r = net.send_data(1, 2);
    EXPECT_FALSE(r.delivered());
    EXPECT_EQ(r.discoveries, 1U);
}

TEST(Churn, AlternateBranchNeedsOneDiscovery)
{
    for (auto backend : {Backend::LinkState, Backend::Flood})
    {
        Network net(diamond(), backend);
        EXPECT_THAT(net.send_data(1, 4).path, ElementsAre(1, 2, 4));
        net.handle_departure(2);
        const auto r = net.send_data(1, 4);
        EXPECT_TRUE(r.delivered());
        EXPECT_EQ(r.discoveries, 1U);
        EXPECT_THAT(r.path, ElementsAre(1, 3, 4));
        EXPECT_TRUE(net.send_data(1, 4).cache_hit);
    }
}

TEST(Churn, StaleRelayIsRepairedMidPath)
{
    // 3 trained 3->1->4->2; 1 then loses its table when 4 leaves and comes
    // back as 6 linked to 1 and 2.
    Network net(desk_graph(), Backend::LinkState);
    net.send_data(3, 2);
    net.handle_departure(4);
    const std::vector<NodeId> links{1, 2};
    EXPECT_EQ(net.handle_arrival(6, links), 2U);
    const auto r = net.send_data(3, 2);
    EXPECT_TRUE(r.delivered());
    EXPECT_THAT(r.path, ElementsAre(3, 1, 6, 2));
    EXPECT_EQ(r.discoveries, 1U);
}

TEST(Churn, ArrivalGrowsEveryTable)
{
    Network net(desk_graph(), Backend::LinkState);
    EXPECT_EQ(net.total_table_bytes(), 25U);
    const std::vector<NodeId> links{1, 2, 3};
    net.handle_arrival(6, links);
    EXPECT_EQ(net.total_table_bytes(), 36U);
    EXPECT_EQ(net.table(6).destination_count(), 6U);
    const auto r = net.send_data(6, 5);
    EXPECT_TRUE(r.delivered());
    EXPECT_EQ(r.data_hops, 2U);
    net.handle_departure(6);
    EXPECT_EQ(net.total_table_bytes(), 30U);
}

} // namespace
} // namespace bitroute
