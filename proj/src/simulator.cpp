#include "bitroute/simulator.hpp"

#include <bit>
#include <future>

namespace bitroute
{

bool
Metrics::reconciles() const noexcept
{
    std::uint64_t counted = 0;
    for (const auto& c : traffic)
    {
        counted += c.count;
    }
    return transfers == cache_hits + trained_deliveries + failures &&
           deliveries == cache_hits + trained_deliveries && counted == data_hops_total;
}

Simulator::Simulator(const Scenario& scenario)
    : Simulator(scenario, scenario.backend)
{
}

Simulator::Simulator(const Scenario& scenario, Backend backend)
    : Simulator(scenario.name, materialize(scenario), backend)
{
}

Simulator::Simulator(std::string name, ConcreteScenario concrete, Backend backend)
    : m_name(std::move(name)),
      m_initialGraph(concrete.graph),
      m_events(std::move(concrete.events)),
      m_network(std::move(concrete.graph), backend)
{
}

RunResult
Simulator::run()
{
    RunResult result;
    auto& m = result.metrics;
    m.scenario = m_name;
    m.backend = m_network.backend();
    m.table_bytes_by_epoch.push_back(m_network.total_table_bytes());

    for (std::size_t step = 0; step < m_events.size(); ++step)
    {
        EventRecord record;
        record.step = step;
        record.event = m_events[step];

        if (const auto* t = std::get_if<TransferEvent>(&m_events[step]))
        {
            auto report = m_network.send_data(t->source, t->destination);
            ++m.transfers;
            m.discoveries += report.discoveries;
            m.control_messages += report.control_messages;
            m.data_hops_total += report.data_hops;
            if (report.delivered())
            {
                ++m.deliveries;
                ++(report.cache_hit ? m.cache_hits : m.trained_deliveries);
            }
            else
            {
                ++m.failures;
            }
            m.hops_by_pair[{t->source, t->destination}].push_back(report.data_hops);
            record.report = std::move(report);
        }
        else if (const auto* r = std::get_if<RemoveEvent>(&m_events[step]))
        {
            record.tables_cleared = m_network.handle_departure(r->node);
            m.table_bytes_by_epoch.push_back(m_network.total_table_bytes());
        }
        else
        {
            const auto& a = std::get<AddEvent>(m_events[step]);
            record.tables_cleared = m_network.handle_arrival(a.node, a.neighbors);
            m.table_bytes_by_epoch.push_back(m_network.total_table_bytes());
        }
        result.log.push_back(std::move(record));
    }

    const auto& g = m_network.graph();
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId v = 1; v <= n; ++v)
    {
        const auto& table = m_network.table(v);
        for (NodeId d = 1; d <= n; ++d)
        {
            if (const auto count = table.traffic(d); count > 0)
            {
                m.traffic.push_back({v, d, count});
            }
            if (g.is_alive(v))
            {
                if (const auto mask = table.entry(d); !mask.empty())
                {
                    // ordinal 0 marks a corrupt (multi-bit) mask
                    const auto ordinal =
                        std::has_single_bit(mask.bits()) ? decode_ordinal(mask) : EdgeOrdinal{0};
                    m.tables.push_back({v, d, ordinal});
                }
            }
        }
    }
    return result;
}

RunResult
run_scenario(const Scenario& scenario)
{
    return Simulator(scenario).run();
}

BackendComparison
compare_backends(const Scenario& scenario)
{
    // Validate on the calling thread so errors surface before any worker starts.
    Simulator link_state(scenario, Backend::LinkState);
    Simulator flood(scenario, Backend::Flood);
    auto flood_run = std::async(std::launch::async, [&flood] { return flood.run(); });
    BackendComparison out;
    out.link_state = link_state.run();
    out.flood = flood_run.get();
    return out;
}

} // namespace bitroute
