#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace bitroute::cli
{

std::optional<std::size_t>
bfs_hops(const Graph& g, NodeId s, NodeId d)
{
    const auto n = g.node_count();
    std::vector<std::size_t> dist(n + 1, std::numeric_limits<std::size_t>::max());
    std::deque<NodeId> queue{s};
    dist[s] = 0;
    while (!queue.empty())
    {
        const auto u = queue.front();
        queue.pop_front();
        for (NodeId v = 1; v <= n; ++v)
        {
            if (g.adjacent(u, v) && dist[v] == std::numeric_limits<std::size_t>::max())
            {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if (dist[d] == std::numeric_limits<std::size_t>::max())
    {
        return std::nullopt;
    }
    return dist[d];
}

std::optional<double>
bellman_ford_cost(const Graph& g, NodeId s, NodeId d)
{
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const auto n = g.node_count();
    const auto edges = g.edges();
    std::vector<double> dist(n + 1, kInf);
    dist[s] = 0.0;
    for (std::size_t round = 1; round < n; ++round)
    {
        bool changed = false;
        for (const auto& e : edges)
        {
            if (dist[e.a] + e.weight < dist[e.b])
            {
                dist[e.b] = dist[e.a] + e.weight;
                changed = true;
            }
            if (dist[e.b] + e.weight < dist[e.a])
            {
                dist[e.a] = dist[e.b] + e.weight;
                changed = true;
            }
        }
        if (!changed)
        {
            break;
        }
    }
    if (dist[d] == kInf)
    {
        return std::nullopt;
    }
    return dist[d];
}

OracleReport
check_against_oracle(const Graph& g, const RunResult& run)
{
    OracleReport report;
    report.weighted = !g.unit_weights();
    for (const auto& record : run.log)
    {
        const auto* t = std::get_if<TransferEvent>(&record.event);
        if (t == nullptr || !record.report || !record.report->delivered())
        {
            continue;
        }
        ++report.checked;
        const auto& path = record.report->path;
        if (!report.weighted)
        {
            const auto best = bfs_hops(g, t->source, t->destination);
            const auto hops = record.report->data_hops;
            if (!best || hops > *best)
            {
                report.mismatches.push_back({record.step, t->source, t->destination,
                                             static_cast<double>(hops),
                                             best ? static_cast<double>(*best) : -1.0});
            }
            continue;
        }
        double cost = 0.0;
        for (std::size_t i = 1; i < path.size(); ++i)
        {
            cost += g.weight(path[i - 1], path[i]);
        }
        const auto best = bellman_ford_cost(g, t->source, t->destination);
        if (!best || cost > *best + 1e-9 * std::max(1.0, *best))
        {
            report.mismatches.push_back(
                {record.step, t->source, t->destination, cost, best ? *best : -1.0});
        }
    }
    return report;
}

} // namespace bitroute::cli
