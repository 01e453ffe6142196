#include "bitroute/training.hpp"

#include "bitroute/errors.hpp"

#include <string>

namespace bitroute
{

Network::Network(Graph graph, Backend backend)
    : m_graph(std::move(graph)),
      m_backend(backend)
{
    const auto n = m_graph.node_count();
    m_tables.reserve(n);
    for (NodeId v = 1; v <= n; ++v)
    {
        const auto degree = m_graph.is_alive(v) ? m_graph.degree(v) : 0;
        m_tables.emplace_back(v, n, degree);
    }
}

void
Network::require_alive(NodeId node) const
{
    if (!m_graph.is_alive(node))
    {
        throw GraphError("node " + std::to_string(node) + " is not an alive member of the network");
    }
}

const RouteTable&
Network::table(NodeId node) const
{
    if (!m_graph.contains(node))
    {
        throw GraphError("unknown node " + std::to_string(node));
    }
    return m_tables[node - 1];
}

RouteTable&
Network::table(NodeId node)
{
    if (!m_graph.contains(node))
    {
        throw GraphError("unknown node " + std::to_string(node));
    }
    return m_tables[node - 1];
}

TrainingResult
Network::train(NodeId s, NodeId d)
{
    require_alive(s);
    require_alive(d);
    TrainingResult out;
    auto& source = m_tables[s - 1];
    const auto cached = source.get_next_hop(m_graph, d);
    if (cached.ok())
    {
        out.trained = true;
        return out;
    }
    if (cached.status != NextHop::Status::Untrained)
    {
        source.clear_entry(d);
    }

    const auto found = discover(m_backend, m_graph, s, d);
    out.discoveries = 1;
    out.control_messages = found.control_messages;
    if (!found.route)
    {
        return out;
    }
    out.entries_written = send_update(*found.route);
    out.trained = out.entries_written > 0;
    return out;
}

std::size_t
Network::send_update(const Route& route)
{
    if (route.nodes.size() < 2)
    {
        return 0;
    }
    const NodeId d = route.destination();
    std::size_t written = 0;
    for (std::size_t t = 0; t + 1 < route.nodes.size(); ++t)
    {
        const NodeId here = route.nodes[t];
        const NodeId next = route.nodes[t + 1];
        if (!m_graph.is_alive(here) || !m_graph.is_alive(next) || !m_graph.adjacent(here, next))
        {
            break;
        }
        m_tables[here - 1].set_entry(d, m_graph.index_edge(here, next));
        ++written;
    }
    return written;
}

DeliveryReport
Network::transfer_data(NodeId s, NodeId d)
{
    require_alive(s);
    require_alive(d);
    DeliveryReport report;
    report.path.push_back(s);

    // A simple path never needs more than alive_count() nodes; anything
    // longer is a forwarding loop left behind by churn.
    const std::size_t limit = m_graph.alive_count();
    NodeId current = s;
    bool repaired = false;
    while (current != d)
    {
        const auto hop = m_tables[current - 1].get_next_hop(m_graph, d);
        if (!hop.ok())
        {
            if (repaired)
            {
                break;
            }
            const auto repair = train(current, d);
            report.discoveries += repair.discoveries;
            report.control_messages += repair.control_messages;
            if (!repair.trained)
            {
                break;
            }
            repaired = true;
            continue;
        }
        if (report.path.size() >= limit)
        {
            break;
        }
        repaired = false;
        m_tables[current - 1].count_traffic(d);
        report.path.push_back(hop.node);
        ++report.data_hops;
        current = hop.node;
    }

    if (current == d)
    {
        report.outcome = DeliveryReport::Outcome::Delivered;
        report.cache_hit = report.discoveries == 0;
    }
    return report;
}

DeliveryReport
Network::send_data(NodeId s, NodeId d)
{
    require_alive(s);
    require_alive(d);
    if (s == d)
    {
        return transfer_data(s, d);
    }
    const auto training = train(s, d);
    if (!training.trained)
    {
        DeliveryReport report;
        report.path.push_back(s);
        report.discoveries = training.discoveries;
        report.control_messages = training.control_messages;
        return report;
    }
    auto report = transfer_data(s, d);
    report.discoveries += training.discoveries;
    report.control_messages += training.control_messages;
    report.cache_hit = report.delivered() && report.discoveries == 0;
    return report;
}

std::size_t
Network::handle_departure(NodeId v)
{
    require_alive(v);
    const auto former = m_graph.remove_node(v);
    for (auto& table : m_tables)
    {
        if (m_graph.is_alive(table.owner()))
        {
            table.invalidate_for_departure(m_graph, v, former);
        }
    }
    m_tables[v - 1].clear();
    // every former neighbor had its row change and was reset
    return former.size();
}

std::size_t
Network::handle_arrival(NodeId v, std::span<const NodeId> neighbors)
{
    m_graph.add_node(v, neighbors);
    const auto n = m_graph.node_count();
    for (auto& table : m_tables)
    {
        table.grow(n);
    }
    m_tables.emplace_back(v, n, m_graph.degree(v));
    for (NodeId u : neighbors)
    {
        m_tables[u - 1].reset(n, m_graph.degree(u));
    }
    return neighbors.size();
}

std::uint64_t
Network::traffic_count(NodeId node, NodeId dest) const
{
    return table(node).traffic(dest);
}

std::size_t
Network::total_table_bytes() const
{
    std::size_t total = 0;
    for (const auto& table : m_tables)
    {
        if (m_graph.is_alive(table.owner()))
        {
            total += table_byte_size(table, m_graph);
        }
    }
    return total;
}

} // namespace bitroute
