#pragma once

#include "bitroute/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace bitroute
{

/// Route discovery backend. The training layer does not care which one
/// produced a route.
enum class Backend
{
    LinkState, ///< pre-converged table-driven routing, no control traffic
    Flood      ///< on-demand request flood plus reply
};

std::string_view to_string(Backend backend) noexcept;

/// "link_state" or "flood"; nullopt for anything else.
std::optional<Backend> parse_backend(std::string_view name) noexcept;

/// Ordered node list from source to destination.
struct Route
{
    std::vector<NodeId> nodes;

    std::size_t hops() const noexcept
    {
        return nodes.empty() ? 0 : nodes.size() - 1;
    }

    NodeId source() const
    {
        return nodes.front();
    }

    NodeId destination() const
    {
        return nodes.back();
    }

    friend bool operator==(const Route&, const Route&) = default;
};

/// True if consecutive nodes are alive and adjacent in g and no node repeats.
bool is_valid_route(const Graph& g, const Route& route);

/// Sum of edge weights along a valid route.
double route_cost(const Graph& g, const Route& route);

struct DiscoveryOutcome
{
    std::optional<Route> route; ///< nullopt when d is unreachable from s
    std::uint64_t control_messages = 0;
    Backend backend = Backend::LinkState;

    bool reachable() const noexcept
    {
        return route.has_value();
    }
};

/// Dispatches to the chosen backend. Requires s and d alive and distinct;
/// throws GraphError otherwise.
DiscoveryOutcome discover(Backend backend, const Graph& g, NodeId s, NodeId d);

/// As above with the backend given by name; throws Error on an unknown name.
DiscoveryOutcome discover(std::string_view backend, const Graph& g, NodeId s, NodeId d);

/// Minimum-weight route. Among equal-cost routes the lexicographically
/// smallest node sequence wins.
std::optional<Route> link_state_route(const Graph& g, NodeId s, NodeId d);

struct FloodResult
{
    std::optional<Route> route;
    std::uint64_t control_messages = 0;
};

/**
 * Breadth-first request flood from s over the whole component. Every node
 * the request reaches, except d, forwards it once to each alive neighbor
 * other than the one it first heard it from; each such transmission counts
 * as one control message. d answers with a reply that walks the parent
 * pointers back to s, adding route hops to the count.
 */
FloodResult flood_route(const Graph& g, NodeId s, NodeId d);

} // namespace bitroute
