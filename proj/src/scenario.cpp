#include "bitroute/scenario.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

namespace bitroute
{

namespace detail
{

std::uint64_t
uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
    {
        throw Error("uniform_below needs a positive bound");
    }
    // Largest multiple of bound that fits; reject draws above it.
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit)
    {
        x = rng();
    }
    return x % bound;
}

double
unit_real(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool
connected_without(const Graph& g, NodeId excluded)
{
    NodeId start = 0;
    std::size_t expected = 0;
    for (NodeId v = 1; v <= g.node_count(); ++v)
    {
        if (g.is_alive(v) && v != excluded)
        {
            start = start == 0 ? v : start;
            ++expected;
        }
    }
    if (expected <= 1)
    {
        return true;
    }
    std::vector<std::uint8_t> seen(g.node_count() + 1, 0);
    std::deque<NodeId> queue{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!queue.empty())
    {
        const auto u = queue.front();
        queue.pop_front();
        for (NodeId v : g.neighbors(u))
        {
            if (v != excluded && !seen[v])
            {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == expected;
}

Graph
random_connected_graph(std::mt19937_64& rng, std::size_t node_count, double edge_prob)
{
    for (std::size_t attempt = 0; attempt < kMaxGraphAttempts; ++attempt)
    {
        std::vector<EdgeSpec> edges;
        for (NodeId i = 1; i <= node_count; ++i)
        {
            for (NodeId j = i + 1; j <= node_count; ++j)
            {
                if (unit_real(rng) < edge_prob)
                {
                    edges.push_back({i, j, 1.0});
                }
            }
        }
        auto g = Graph::build(node_count, edges);
        if (connected_without(g, 0))
        {
            return g;
        }
    }
    throw Error("no connected graph with " + std::to_string(node_count) +
                " nodes and edge_prob " + std::to_string(edge_prob) + " after " +
                std::to_string(kMaxGraphAttempts) + " attempts; try a higher edge_prob");
}

namespace
{

std::vector<NodeId>
alive_nodes(const Graph& g)
{
    std::vector<NodeId> out;
    for (NodeId v = 1; v <= g.node_count(); ++v)
    {
        if (g.is_alive(v))
        {
            out.push_back(v);
        }
    }
    return out;
}

TransferEvent
random_pair(std::mt19937_64& rng, const std::vector<NodeId>& alive)
{
    const auto si = uniform_below(rng, alive.size());
    auto di = uniform_below(rng, alive.size() - 1);
    if (di >= si)
    {
        ++di;
    }
    return {alive[si], alive[di]};
}

} // namespace

std::vector<Event>
draw_workload(std::mt19937_64& rng, Graph g, const Workload& workload)
{
    std::vector<Event> events;
    auto alive = alive_nodes(g);
    if (alive.size() < 2 && workload.transfers > 0)
    {
        throw Error("workload needs at least two alive nodes");
    }

    std::vector<TransferEvent> pool;
    if (workload.pairs > 0)
    {
        const auto possible = alive.size() * (alive.size() - 1);
        const auto wanted = std::min(workload.pairs, possible);
        std::set<std::pair<NodeId, NodeId>> chosen;
        while (pool.size() < wanted)
        {
            const auto p = random_pair(rng, alive);
            if (chosen.emplace(p.source, p.destination).second)
            {
                pool.push_back(p);
            }
        }
    }

    // Which of the transfers + churn slots are churn.
    const auto total = workload.transfers + workload.churn;
    std::vector<std::uint8_t> churn_slot(total, 0);
    std::fill_n(churn_slot.begin(), workload.churn, 1);
    for (std::size_t i = total; i > 1; --i)
    {
        std::swap(churn_slot[i - 1], churn_slot[uniform_below(rng, i)]);
    }

    for (std::size_t slot = 0; slot < total; ++slot)
    {
        if (!churn_slot[slot])
        {
            std::vector<TransferEvent> usable;
            for (const auto& p : pool)
            {
                if (g.is_alive(p.source) && g.is_alive(p.destination))
                {
                    usable.push_back(p);
                }
            }
            events.emplace_back(usable.empty() ? random_pair(rng, alive)
                                               : usable[uniform_below(rng, usable.size())]);
            continue;
        }

        const bool try_remove = alive.size() > 2 && unit_real(rng) < 0.5;
        if (try_remove)
        {
            std::vector<NodeId> candidates;
            for (NodeId v : alive)
            {
                if (workload.allow_partition || connected_without(g, v))
                {
                    candidates.push_back(v);
                }
            }
            if (!candidates.empty())
            {
                const auto v = candidates[uniform_below(rng, candidates.size())];
                g.remove_node(v);
                alive.erase(std::find(alive.begin(), alive.end(), v));
                events.emplace_back(RemoveEvent{v});
                continue;
            }
        }

        const auto v = static_cast<NodeId>(g.node_count() + 1);
        const auto links = 1 + uniform_below(rng, std::min<std::size_t>(3, alive.size()));
        auto candidates = alive;
        std::vector<NodeId> neighbors;
        for (std::size_t i = 0; i < links; ++i)
        {
            const auto pick = uniform_below(rng, candidates.size());
            neighbors.push_back(candidates[pick]);
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        std::sort(neighbors.begin(), neighbors.end());
        g.add_node(v, neighbors);
        alive.push_back(v);
        events.emplace_back(AddEvent{v, std::move(neighbors)});
    }
    return events;
}

} // namespace detail

bool
is_churn(const Event& event) noexcept
{
    return !std::holds_alternative<TransferEvent>(event);
}

std::vector<EventProblem>
validate_events(const Graph& graph, std::span<const Event> events)
{
    std::vector<EventProblem> problems;
    Graph g = graph;
    auto report = [&](std::size_t index, const std::string& message) {
        problems.push_back({index, message});
    };
    for (std::size_t i = 0; i < events.size(); ++i)
    {
        if (const auto* t = std::get_if<TransferEvent>(&events[i]))
        {
            for (NodeId id : {t->source, t->destination})
            {
                if (!g.is_alive(id))
                {
                    report(i, "transfer endpoint " + std::to_string(id) + " is not alive");
                }
            }
        }
        else if (const auto* r = std::get_if<RemoveEvent>(&events[i]))
        {
            if (!g.is_alive(r->node))
            {
                report(i, "cannot remove node " + std::to_string(r->node) + ": not alive");
                continue;
            }
            g.remove_node(r->node);
        }
        else
        {
            const auto& a = std::get<AddEvent>(events[i]);
            try
            {
                g.add_node(a.node, a.neighbors);
            }
            catch (const GraphError& e)
            {
                report(i, e.what());
            }
        }
    }
    return problems;
}

namespace
{

Graph
apply_churn(Graph g, std::span<const Event> events)
{
    for (const auto& e : events)
    {
        if (const auto* r = std::get_if<RemoveEvent>(&e))
        {
            g.remove_node(r->node);
        }
        else if (const auto* a = std::get_if<AddEvent>(&e))
        {
            g.add_node(a->node, a->neighbors);
        }
    }
    return g;
}

} // namespace

ConcreteScenario
materialize(const Scenario& scenario)
{
    std::mt19937_64 rng(scenario.seed);
    ConcreteScenario out;

    if (const auto* ex = std::get_if<ExplicitGraph>(&scenario.graph))
    {
        try
        {
            out.graph = Graph::build(ex->node_count, ex->edges);
        }
        catch (const GraphError& e)
        {
            throw ScenarioError({{0, e.what()}});
        }
    }
    else
    {
        const auto& rg = std::get<RandomGraph>(scenario.graph);
        if (rg.node_count < 2 || !(rg.edge_prob > 0.0 && rg.edge_prob <= 1.0))
        {
            throw ScenarioError(
                {{0, "random graph needs nodes >= 2 and 0 < edge_prob <= 1"}});
        }
        out.graph = detail::random_connected_graph(rng, rg.node_count, rg.edge_prob);
    }

    if (const auto problems = validate_events(out.graph, scenario.events); !problems.empty())
    {
        std::vector<Diagnostic> diagnostics;
        for (const auto& p : problems)
        {
            diagnostics.push_back({0, "event " + std::to_string(p.index + 1) + ": " + p.message});
        }
        throw ScenarioError(std::move(diagnostics));
    }
    out.events = scenario.events;

    if (scenario.workload)
    {
        auto drawn = detail::draw_workload(rng, apply_churn(out.graph, out.events),
                                           *scenario.workload);
        out.events.insert(out.events.end(), std::make_move_iterator(drawn.begin()),
                          std::make_move_iterator(drawn.end()));
    }
    return out;
}

Scenario
generate_random_scenario(const GeneratorParams& params)
{
    if (params.node_count < 2)
    {
        throw ScenarioError({{0, "generator needs at least 2 nodes"}});
    }
    if (!(params.edge_prob > 0.0 && params.edge_prob <= 1.0))
    {
        throw ScenarioError({{0, "edge_prob must be in (0, 1]"}});
    }

    Scenario sc;
    sc.name = params.name;
    sc.backend = params.backend;
    sc.seed = params.seed;
    sc.graph = RandomGraph{params.node_count, params.edge_prob};
    sc.workload = Workload{params.transfers, params.pairs, params.churn, params.allow_partition};

    // Same stream consumption as materialize(), so the explicit form and the
    // generator form of the scenario run identically.
    auto concrete = materialize(sc);
    sc.graph = ExplicitGraph{concrete.graph.node_count(), concrete.graph.edges()};
    sc.events = std::move(concrete.events);
    sc.workload.reset();
    return sc;
}

} // namespace bitroute
