#pragma once

#include "bitroute/discovery.hpp"
#include "bitroute/errors.hpp"
#include "bitroute/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bitroute
{

struct TransferEvent
{
    NodeId source = 0;
    NodeId destination = 0;

    friend bool operator==(const TransferEvent&, const TransferEvent&) = default;
};

struct RemoveEvent
{
    NodeId node = 0;

    friend bool operator==(const RemoveEvent&, const RemoveEvent&) = default;
};

struct AddEvent
{
    NodeId node = 0;
    std::vector<NodeId> neighbors;

    friend bool operator==(const AddEvent&, const AddEvent&) = default;
};

/// Logical time of an event is its index in the event list.
using Event = std::variant<TransferEvent, RemoveEvent, AddEvent>;

bool is_churn(const Event& event) noexcept;

struct ExplicitGraph
{
    std::size_t node_count = 0;
    std::vector<EdgeSpec> edges;

    friend bool operator==(const ExplicitGraph&, const ExplicitGraph&) = default;
};

/// G(n, p) graph drawn from the run's random stream, redrawn until connected.
struct RandomGraph
{
    std::size_t node_count = 0;
    double edge_prob = 0.0;

    friend bool operator==(const RandomGraph&, const RandomGraph&) = default;
};

using GraphSource = std::variant<ExplicitGraph, RandomGraph>;

/// Random events appended after the explicit ones.
struct Workload
{
    std::size_t transfers = 0;
    /// When nonzero, transfers draw from this many distinct (s,d) pairs
    /// chosen up front; otherwise every transfer picks a fresh pair.
    std::size_t pairs = 0;
    /// Node departures/arrivals interleaved at random positions.
    std::size_t churn = 0;
    /// Allow departures that disconnect the network. Off by default, in
    /// which case only nodes whose loss keeps the alive graph connected
    /// are removed.
    bool allow_partition = false;

    friend bool operator==(const Workload&, const Workload&) = default;
};

struct Scenario
{
    std::string name = "scenario";
    GraphSource graph = ExplicitGraph{};
    Backend backend = Backend::LinkState;
    /// Seeds the run's single random stream: the random graph is drawn
    /// first, then the workload.
    std::uint64_t seed = 1;
    std::vector<Event> events;
    std::optional<Workload> workload;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// A scenario with every random choice made.
struct ConcreteScenario
{
    Graph graph;
    std::vector<Event> events;
};

/// Resolves generators and the workload from the scenario seed, then
/// validates the result. Throws ScenarioError listing every problem.
ConcreteScenario materialize(const Scenario& scenario);

struct EventProblem
{
    std::size_t index = 0; ///< 0-based position in the event list
    std::string message;
};

/// Checks that each event references ids valid at its position.
std::vector<EventProblem> validate_events(const Graph& graph, std::span<const Event> events);

struct GeneratorParams
{
    std::size_t node_count = 10;
    double edge_prob = 0.4;
    std::size_t transfers = 100;
    std::size_t churn = 0;
    std::uint64_t seed = 1;
    std::size_t pairs = 0;
    bool allow_partition = false;
    Backend backend = Backend::LinkState;
    std::string name = "generated";
};

/// Fully explicit random scenario: a connected G(n, p) graph plus a
/// workload, both drawn from one stream seeded with params.seed.
Scenario generate_random_scenario(const GeneratorParams& params);

/// Attempts made before giving up on a connected random graph.
inline constexpr std::size_t kMaxGraphAttempts = 1000;

namespace detail
{

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementations so streams match everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double unit_real(std::mt19937_64& rng);

Graph random_connected_graph(std::mt19937_64& rng, std::size_t node_count, double edge_prob);

/// Draws workload events for a network currently shaped like g.
std::vector<Event> draw_workload(std::mt19937_64& rng, Graph g, const Workload& workload);

bool connected_without(const Graph& g, NodeId excluded);

} // namespace detail

} // namespace bitroute
