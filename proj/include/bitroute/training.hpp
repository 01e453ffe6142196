#pragma once

#include "bitroute/discovery.hpp"
#include "bitroute/graph.hpp"
#include "bitroute/route_cache.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bitroute
{

/// What happened to one data packet.
struct DeliveryReport
{
    enum class Outcome
    {
        Delivered,
        Undeliverable
    };

    Outcome outcome = Outcome::Undeliverable;
    std::vector<NodeId> path; ///< nodes actually traversed, starting at the source
    std::uint64_t data_hops = 0;
    std::uint64_t discoveries = 0;
    std::uint64_t control_messages = 0;
    bool cache_hit = false;

    bool delivered() const noexcept
    {
        return outcome == Outcome::Delivered;
    }

    friend bool operator==(const DeliveryReport&, const DeliveryReport&) = default;
};

struct TrainingResult
{
    bool trained = false; ///< a usable entry exists at the source afterwards
    std::uint64_t discoveries = 0;
    std::uint64_t control_messages = 0;
    std::size_t entries_written = 0;
};

/**
 * Simulation state for the training scheme: the topology, one route table
 * per node and the discovery backend used on a cache miss.
 *
 * A destination is trained by running discovery once and writing the
 * next-hop edge for it into every node on the returned route. Data then
 * moves hop by hop on the cached masks alone. When a node on the way has
 * no usable entry (only possible after churn) the network retrains from
 * that node and carries on.
 *
 * All mutation is single-threaded; a Network may be moved between threads
 * as a whole.
 */
class Network
{
  public:
    Network(Graph graph, Backend backend);

    const Graph& graph() const noexcept
    {
        return m_graph;
    }

    Backend backend() const noexcept
    {
        return m_backend;
    }

    const RouteTable& table(NodeId node) const;

    /// Mutable access for fault injection in tests and tools.
    RouteTable& table(NodeId node);

    /// Trains s for d unless s already holds a usable entry. Stale or corrupt
    /// entries at s are cleared first. Unreachable d leaves every table
    /// untouched and reports trained == false.
    TrainingResult train(NodeId s, NodeId d);

    /// Writes the next-hop edge toward the route's last node into every
    /// other node on it and returns the number of entries written. Stops
    /// early at the first hop that is no longer valid.
    std::size_t send_update(const Route& route);

    /// Forwards one packet from s to d on cached masks, repairing untrained
    /// or stale hops by retraining from the current node.
    DeliveryReport transfer_data(NodeId s, NodeId d);

    /// train(s, d) followed by transfer_data(s, d).
    DeliveryReport send_data(NodeId s, NodeId d);

    /// Removes v from the topology and invalidates every table whose row
    /// changed. Returns how many tables were cleared.
    std::size_t handle_departure(NodeId v);

    /// Adds node v = node_count() + 1 with the given neighbors. The
    /// neighbors' rows change, so their tables are cleared. Returns how many
    /// tables were cleared.
    std::size_t handle_arrival(NodeId v, std::span<const NodeId> neighbors);

    /// Packets node has forwarded or originated toward dest since the start
    /// of the run. Counters survive the node leaving.
    std::uint64_t traffic_count(NodeId node, NodeId dest) const;

    /// Sum of table_byte_size over alive nodes.
    std::size_t total_table_bytes() const;

  private:
    void require_alive(NodeId node) const;

    Graph m_graph;
    Backend m_backend;
    std::vector<RouteTable> m_tables; // index node-1
};

} // namespace bitroute
