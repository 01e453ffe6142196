#pragma once

#include "bitroute/scenario.hpp"
#include "bitroute/training.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bitroute
{

/// One executed event. Transfers carry their report, churn events the
/// number of tables they cleared.
struct EventRecord
{
    std::size_t step = 0;
    Event event;
    std::optional<DeliveryReport> report;
    std::size_t tables_cleared = 0;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// (owner, destination, ordinal) for one trained entry.
struct TableEntry
{
    NodeId owner = 0;
    NodeId destination = 0;
    EdgeOrdinal ordinal = 0;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TrafficCounter
{
    NodeId node = 0;
    NodeId destination = 0;
    std::uint64_t count = 0;

    friend bool operator==(const TrafficCounter&, const TrafficCounter&) = default;
};

struct Metrics
{
    std::string scenario;
    Backend backend = Backend::LinkState;

    std::uint64_t transfers = 0;
    std::uint64_t deliveries = 0;
    std::uint64_t failures = 0;
    /// Delivered without any discovery.
    std::uint64_t cache_hits = 0;
    /// Delivered after at least one discovery.
    std::uint64_t trained_deliveries = 0;
    std::uint64_t discoveries = 0;
    std::uint64_t control_messages = 0;
    std::uint64_t data_hops_total = 0;

    /// Total table footprint of alive nodes at the start and after every
    /// churn event; back() is the final value.
    std::vector<std::size_t> table_bytes_by_epoch;
    /// data_hops of every transfer, keyed by (source, destination).
    std::map<std::pair<NodeId, NodeId>, std::vector<std::uint64_t>> hops_by_pair;
    /// Nonzero counters at the end of the run, ordered by (node, destination).
    std::vector<TrafficCounter> traffic;
    /// Trained entries of alive nodes at the end of the run.
    std::vector<TableEntry> tables;

    std::size_t table_bytes() const noexcept
    {
        return table_bytes_by_epoch.empty() ? 0 : table_bytes_by_epoch.back();
    }

    /// Every transfer is exactly one of cache hit, trained delivery or
    /// failure, and the traffic counters add up to the data hops.
    bool reconciles() const noexcept;

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct RunResult
{
    Metrics metrics;
    std::vector<EventRecord> log;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/**
 * Executes a scenario's events in order against a Network. Construction
 * resolves and validates the scenario, so a Simulator that exists can run.
 * The network is exposed before run() for fault injection.
 */
class Simulator
{
  public:
    /// Throws ScenarioError when the scenario does not validate.
    explicit Simulator(const Scenario& scenario);
    Simulator(const Scenario& scenario, Backend backend);

    Network& network() noexcept
    {
        return m_network;
    }

    const std::vector<Event>& events() const noexcept
    {
        return m_events;
    }

    /// The graph before any event ran.
    const Graph& initial_graph() const noexcept
    {
        return m_initialGraph;
    }

    /// Executes every event once. The network keeps its final state.
    RunResult run();

  private:
    Simulator(std::string name, ConcreteScenario concrete, Backend backend);

    std::string m_name;
    Graph m_initialGraph;
    std::vector<Event> m_events;
    Network m_network;
};

RunResult run_scenario(const Scenario& scenario);

struct BackendComparison
{
    RunResult link_state;
    RunResult flood;
};

/// Runs the same events under both backends, one worker each. The
/// scenario's own backend field is ignored.
BackendComparison compare_backends(const Scenario& scenario);

} // namespace bitroute
