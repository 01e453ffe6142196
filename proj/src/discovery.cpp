#include "bitroute/discovery.hpp"

#include "bitroute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <string>

namespace bitroute
{

namespace
{

void
require_endpoints(const Graph& g, NodeId s, NodeId d)
{
    for (NodeId id : {s, d})
    {
        if (!g.is_alive(id))
        {
            throw GraphError("discovery endpoint " + std::to_string(id) + " is not alive");
        }
    }
    if (s == d)
    {
        throw GraphError("discovery needs distinct endpoints, got " + std::to_string(s) +
                         " twice");
    }
}

bool
same_cost(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

std::string_view
to_string(Backend backend) noexcept
{
    switch (backend)
    {
    case Backend::LinkState:
        return "link_state";
    case Backend::Flood:
        return "flood";
    }
    return "unknown";
}

std::optional<Backend>
parse_backend(std::string_view name) noexcept
{
    if (name == "link_state")
    {
        return Backend::LinkState;
    }
    if (name == "flood")
    {
        return Backend::Flood;
    }
    return std::nullopt;
}

bool
is_valid_route(const Graph& g, const Route& route)
{
    if (route.nodes.empty())
    {
        return false;
    }
    std::vector<std::uint8_t> seen(g.node_count() + 1, 0);
    for (std::size_t t = 0; t < route.nodes.size(); ++t)
    {
        const auto v = route.nodes[t];
        if (!g.is_alive(v) || seen[v])
        {
            return false;
        }
        seen[v] = 1;
        if (t > 0 && !g.adjacent(route.nodes[t - 1], v))
        {
            return false;
        }
    }
    return true;
}

double
route_cost(const Graph& g, const Route& route)
{
    double cost = 0.0;
    for (std::size_t t = 1; t < route.nodes.size(); ++t)
    {
        cost += g.weight(route.nodes[t - 1], route.nodes[t]);
    }
    return cost;
}

DiscoveryOutcome
discover(Backend backend, const Graph& g, NodeId s, NodeId d)
{
    require_endpoints(g, s, d);
    DiscoveryOutcome out;
    out.backend = backend;
    switch (backend)
    {
    case Backend::LinkState:
        out.route = link_state_route(g, s, d);
        break;
    case Backend::Flood: {
        auto flood = flood_route(g, s, d);
        out.route = std::move(flood.route);
        out.control_messages = flood.control_messages;
        break;
    }
    }
    return out;
}

DiscoveryOutcome
discover(std::string_view backend, const Graph& g, NodeId s, NodeId d)
{
    const auto parsed = parse_backend(backend);
    if (!parsed)
    {
        throw Error("unknown discovery backend '" + std::string(backend) + "'");
    }
    return discover(*parsed, g, s, d);
}

std::optional<Route>
link_state_route(const Graph& g, NodeId s, NodeId d)
{
    require_endpoints(g, s, d);

    // Distances toward d, then a greedy walk from s that always takes the
    // smallest-id neighbor still on a shortest path. With positive weights
    // that walk is the lexicographically smallest minimum-cost route.
    const auto n = g.node_count();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n + 1, kInf);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    dist[d] = 0.0;
    frontier.emplace(0.0, d);
    while (!frontier.empty())
    {
        const auto [du, u] = frontier.top();
        frontier.pop();
        if (du > dist[u])
        {
            continue;
        }
        for (NodeId v : g.neighbors(u))
        {
            const double alt = du + g.weight(u, v);
            if (alt < dist[v])
            {
                dist[v] = alt;
                frontier.emplace(alt, v);
            }
        }
    }
    if (dist[s] == kInf)
    {
        return std::nullopt;
    }

    Route route;
    route.nodes.push_back(s);
    NodeId u = s;
    while (u != d)
    {
        NodeId next = 0;
        for (NodeId v : g.neighbors(u))
        {
            if (dist[v] < dist[u] && same_cost(dist[u], g.weight(u, v) + dist[v]))
            {
                next = v;
                break;
            }
        }
        if (next == 0 || route.nodes.size() > n)
        {
            throw Error("link-state walk from " + std::to_string(s) + " to " + std::to_string(d) +
                        " lost the shortest-path tree");
        }
        route.nodes.push_back(next);
        u = next;
    }
    return route;
}

FloodResult
flood_route(const Graph& g, NodeId s, NodeId d)
{
    require_endpoints(g, s, d);

    const auto n = g.node_count();
    std::vector<NodeId> parent(n + 1, 0);
    std::vector<std::uint8_t> reached(n + 1, 0);
    std::deque<NodeId> queue{s};
    reached[s] = 1;

    FloodResult out;
    while (!queue.empty())
    {
        const NodeId u = queue.front();
        queue.pop_front();
        if (u == d)
        {
            continue;
        }
        for (NodeId v : g.neighbors(u))
        {
            if (v == parent[u])
            {
                continue;
            }
            ++out.control_messages;
            if (!reached[v])
            {
                reached[v] = 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }

    if (!reached[d])
    {
        return out;
    }
    Route route;
    for (NodeId v = d; v != 0; v = parent[v])
    {
        route.nodes.push_back(v);
    }
    std::reverse(route.nodes.begin(), route.nodes.end());
    out.control_messages += route.hops();
    out.route = std::move(route);
    return out;
}

} // namespace bitroute
