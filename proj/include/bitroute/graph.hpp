#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bitroute
{

/// Node label, 1-based. Ids are stable for the lifetime of a graph and are
/// never reused after a node leaves.
using NodeId = std::uint32_t;

/// 1-based rank of a neighbor within a node's adjacency row.
using EdgeOrdinal = std::uint32_t;

/// Unordered node pair as given to build_graph.
struct EdgeSpec
{
    NodeId a = 0;
    NodeId b = 0;
    double weight = 1.0;

    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Result of the k-th-one scan over an adjacency row.
struct VertexScan
{
    NodeId vertex = 0;
    /// Number of row cells inspected before the k-th set cell was found
    /// (inclusive of that cell).
    std::size_t comparisons = 0;
};

/**
 * Undirected network topology kept as a dense adjacency matrix over nodes
 * 1..n. Departed nodes stay in the matrix with their row and column
 * cleared so ids keep their meaning for the whole run.
 *
 * Edge ordinals are ranks in increasing neighbor id order: the k-th set cell
 * of row i names the k-th edge of i.
 */
class Graph
{
  public:
    Graph() = default;

    /// Builds an n-node graph. Throws GraphError naming the offending pair on
    /// a self-loop, out-of-range id, duplicate pair or non-positive weight.
    static Graph build(std::size_t node_count, std::span<const EdgeSpec> edges);

    std::size_t node_count() const noexcept
    {
        return m_nodeCount;
    }

    std::size_t alive_count() const noexcept;

    /// True if id is in 1..n (dead or alive).
    bool contains(NodeId id) const noexcept
    {
        return id >= 1 && id <= m_nodeCount;
    }

    bool is_alive(NodeId id) const noexcept
    {
        return contains(id) && m_alive[id - 1];
    }

    bool adjacent(NodeId i, NodeId j) const noexcept
    {
        return contains(i) && contains(j) && m_adjacency[cell(i, j)] != 0;
    }

    /// Weight of edge (i,j). Throws GraphError when the pair is not adjacent.
    double weight(NodeId i, NodeId j) const;

    /// True when every edge has weight exactly 1.
    bool unit_weights() const noexcept;

    /// Alive neighbors of i in increasing id order. Throws GraphError for a
    /// dead or unknown node.
    std::vector<NodeId> neighbors(NodeId i) const;

    std::size_t degree(NodeId i) const;
    std::size_t max_degree() const noexcept;

    /// Every live edge once, as (smaller id, larger id) in row-major order.
    std::vector<EdgeSpec> edges() const;

    /// Number of set cells in row i at columns <= j. Throws GraphError naming
    /// both ids when i and j are not alive and adjacent.
    EdgeOrdinal index_edge(NodeId i, NodeId j) const;

    /// Column of the k-th set cell in row i. Throws GraphError carrying i, k
    /// and degree(i) when k is outside 1..degree(i).
    NodeId index_vertex(NodeId i, EdgeOrdinal k) const
    {
        return scan_vertex(i, k).vertex;
    }

    /// index_vertex plus the number of row cells the scan touched.
    VertexScan scan_vertex(NodeId i, EdgeOrdinal k) const;

    /// Marks v dead, clears its row and column and returns its former
    /// neighbors in increasing id order.
    std::vector<NodeId> remove_node(NodeId v);

    /// Appends node v = node_count() + 1 linked to the given alive nodes with
    /// unit weights.
    void add_node(NodeId v, std::span<const NodeId> neighbors);

  private:
    std::size_t cell(NodeId i, NodeId j) const noexcept
    {
        return static_cast<std::size_t>(i - 1) * m_nodeCount + (j - 1);
    }

    void require_alive(NodeId id) const;

    std::size_t m_nodeCount = 0;
    std::vector<std::uint8_t> m_adjacency; // n*n, symmetric, zero diagonal
    std::vector<double> m_weights;         // n*n, > 0 exactly where adjacent
    std::vector<std::uint8_t> m_alive;
};

} // namespace bitroute
