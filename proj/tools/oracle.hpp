#pragma once

#include "bitroute/graph.hpp"
#include "bitroute/simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace bitroute::cli
{

/// Minimum hop count by plain breadth-first search.
std::optional<std::size_t> bfs_hops(const Graph& g, NodeId s, NodeId d);

/// Minimum path weight by Bellman-Ford relaxation over the edge list.
std::optional<double> bellman_ford_cost(const Graph& g, NodeId s, NodeId d);

struct OracleMismatch
{
    std::size_t step = 0;
    NodeId source = 0;
    NodeId destination = 0;
    double observed = 0.0; ///< hops, or path weight on weighted graphs
    double expected = 0.0;
};

struct OracleReport
{
    bool weighted = false;
    std::size_t checked = 0;
    std::vector<OracleMismatch> mismatches;
};

/// Compares every delivered transfer of a churn-free run with the oracle on
/// the run's (static) graph. Unit-weight graphs are judged on hop count,
/// weighted graphs on path weight.
OracleReport check_against_oracle(const Graph& g, const RunResult& run);

} // namespace bitroute::cli
