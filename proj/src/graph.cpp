#include "bitroute/graph.hpp"

#include "bitroute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bitroute
{

namespace
{

std::string
pair_text(NodeId a, NodeId b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

Graph
Graph::build(std::size_t node_count, std::span<const EdgeSpec> edges)
{
    if (node_count == 0)
    {
        throw GraphError("graph needs at least one node");
    }
    Graph g;
    g.m_nodeCount = node_count;
    g.m_adjacency.assign(node_count * node_count, 0);
    g.m_weights.assign(node_count * node_count, 0.0);
    g.m_alive.assign(node_count, 1);

    for (const auto& e : edges)
    {
        if (!g.contains(e.a) || !g.contains(e.b))
        {
            throw GraphError("edge " + pair_text(e.a, e.b) + " has an id outside 1.." +
                             std::to_string(node_count));
        }
        if (e.a == e.b)
        {
            throw GraphError("edge " + pair_text(e.a, e.b) + " is a self-loop");
        }
        if (g.m_adjacency[g.cell(e.a, e.b)] != 0)
        {
            throw GraphError("edge " + pair_text(e.a, e.b) + " is listed twice");
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        {
            throw GraphError("edge " + pair_text(e.a, e.b) + " has non-positive weight");
        }
        g.m_adjacency[g.cell(e.a, e.b)] = 1;
        g.m_adjacency[g.cell(e.b, e.a)] = 1;
        g.m_weights[g.cell(e.a, e.b)] = e.weight;
        g.m_weights[g.cell(e.b, e.a)] = e.weight;
    }
    return g;
}

std::size_t
Graph::alive_count() const noexcept
{
    return static_cast<std::size_t>(std::count(m_alive.begin(), m_alive.end(), 1));
}

void
Graph::require_alive(NodeId id) const
{
    if (!contains(id))
    {
        throw GraphError("unknown node " + std::to_string(id));
    }
    if (!m_alive[id - 1])
    {
        throw GraphError("node " + std::to_string(id) + " has left the network");
    }
}

double
Graph::weight(NodeId i, NodeId j) const
{
    if (!adjacent(i, j))
    {
        throw GraphError("nodes " + pair_text(i, j) + " are not adjacent");
    }
    return m_weights[cell(i, j)];
}

bool
Graph::unit_weights() const noexcept
{
    for (std::size_t c = 0; c < m_adjacency.size(); ++c)
    {
        if (m_adjacency[c] != 0 && m_weights[c] != 1.0)
        {
            return false;
        }
    }
    return true;
}

std::vector<NodeId>
Graph::neighbors(NodeId i) const
{
    require_alive(i);
    std::vector<NodeId> out;
    for (NodeId j = 1; j <= m_nodeCount; ++j)
    {
        if (m_adjacency[cell(i, j)] != 0)
        {
            out.push_back(j);
        }
    }
    return out;
}

std::size_t
Graph::degree(NodeId i) const
{
    require_alive(i);
    const auto row = m_adjacency.begin() + static_cast<std::ptrdiff_t>(cell(i, 1));
    return static_cast<std::size_t>(
        std::count(row, row + static_cast<std::ptrdiff_t>(m_nodeCount), 1));
}

std::size_t
Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (NodeId i = 1; i <= m_nodeCount; ++i)
    {
        if (m_alive[i - 1])
        {
            best = std::max(best, degree(i));
        }
    }
    return best;
}

std::vector<EdgeSpec>
Graph::edges() const
{
    std::vector<EdgeSpec> out;
    for (NodeId i = 1; i <= m_nodeCount; ++i)
    {
        for (NodeId j = i + 1; j <= m_nodeCount; ++j)
        {
            if (m_adjacency[cell(i, j)] != 0)
            {
                out.push_back({i, j, m_weights[cell(i, j)]});
            }
        }
    }
    return out;
}

EdgeOrdinal
Graph::index_edge(NodeId i, NodeId j) const
{
    if (!is_alive(i) || !is_alive(j) || m_adjacency[cell(i, j)] == 0)
    {
        throw GraphError("nodes " + pair_text(i, j) + " are not adjacent");
    }
    EdgeOrdinal counter = 0;
    for (NodeId col = 1; col <= j; ++col)
    {
        if (m_adjacency[cell(i, col)] != 0)
        {
            ++counter;
        }
    }
    return counter;
}

VertexScan
Graph::scan_vertex(NodeId i, EdgeOrdinal k) const
{
    require_alive(i);
    if (k >= 1)
    {
        EdgeOrdinal counter = 0;
        for (NodeId col = 1; col <= m_nodeCount; ++col)
        {
            if (m_adjacency[cell(i, col)] != 0 && ++counter == k)
            {
                return {col, col};
            }
        }
    }
    throw GraphError("node " + std::to_string(i) + " has no edge " + std::to_string(k) +
                     " (degree " + std::to_string(degree(i)) + ")");
}

std::vector<NodeId>
Graph::remove_node(NodeId v)
{
    auto former = neighbors(v);
    for (NodeId j : former)
    {
        m_adjacency[cell(v, j)] = 0;
        m_adjacency[cell(j, v)] = 0;
        m_weights[cell(v, j)] = 0.0;
        m_weights[cell(j, v)] = 0.0;
    }
    m_alive[v - 1] = 0;
    return former;
}

void
Graph::add_node(NodeId v, std::span<const NodeId> neighbors)
{
    if (v != m_nodeCount + 1)
    {
        throw GraphError("new node must take the next free id " +
                         std::to_string(m_nodeCount + 1) + ", got " + std::to_string(v));
    }
    for (std::size_t a = 0; a < neighbors.size(); ++a)
    {
        require_alive(neighbors[a]);
        for (std::size_t b = a + 1; b < neighbors.size(); ++b)
        {
            if (neighbors[a] == neighbors[b])
            {
                throw GraphError("node " + std::to_string(neighbors[a]) +
                                 " listed twice as a neighbor of " + std::to_string(v));
            }
        }
    }

    const std::size_t n = m_nodeCount + 1;
    std::vector<std::uint8_t> adjacency(n * n, 0);
    std::vector<double> weights(n * n, 0.0);
    for (std::size_t r = 0; r < m_nodeCount; ++r)
    {
        std::copy_n(m_adjacency.begin() + static_cast<std::ptrdiff_t>(r * m_nodeCount),
                    m_nodeCount,
                    adjacency.begin() + static_cast<std::ptrdiff_t>(r * n));
        std::copy_n(m_weights.begin() + static_cast<std::ptrdiff_t>(r * m_nodeCount),
                    m_nodeCount,
                    weights.begin() + static_cast<std::ptrdiff_t>(r * n));
    }
    m_nodeCount = n;
    m_adjacency = std::move(adjacency);
    m_weights = std::move(weights);
    m_alive.push_back(1);
    for (NodeId j : neighbors)
    {
        m_adjacency[cell(v, j)] = 1;
        m_adjacency[cell(j, v)] = 1;
        m_weights[cell(v, j)] = 1.0;
        m_weights[cell(j, v)] = 1.0;
    }
}

} // namespace bitroute
