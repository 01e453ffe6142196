#include "bitroute/metrics_io.hpp"

#include "json.hpp"

#include <sstream>

namespace bitroute
{

namespace
{

using Json = nlohmann::ordered_json;

std::string_view
outcome_name(const DeliveryReport& r)
{
    return r.delivered() ? "delivered" : "undeliverable";
}

} // namespace

std::string_view
summary_csv_header() noexcept
{
    return "scenario,backend,transfers,deliveries,cache_hits,discoveries,control_messages,"
           "data_hops_total,table_bytes";
}

std::string
summary_csv_row(const Metrics& m)
{
    std::ostringstream out;
    out << m.scenario << ',' << to_string(m.backend) << ',' << m.transfers << ',' << m.deliveries
        << ',' << m.cache_hits << ',' << m.discoveries << ',' << m.control_messages << ','
        << m.data_hops_total << ',' << m.table_bytes();
    return out.str();
}

std::string
event_log_jsonl(const RunResult& run)
{
    std::string out;
    for (const auto& record : run.log)
    {
        Json j;
        j["step"] = record.step;
        if (const auto* t = std::get_if<TransferEvent>(&record.event))
        {
            const auto& r = *record.report;
            j["event"] = "transfer";
            j["source"] = t->source;
            j["destination"] = t->destination;
            j["outcome"] = outcome_name(r);
            j["path"] = r.path;
            j["data_hops"] = r.data_hops;
            j["discoveries"] = r.discoveries;
            j["control_messages"] = r.control_messages;
            j["cache_hit"] = r.cache_hit;
        }
        else if (const auto* rm = std::get_if<RemoveEvent>(&record.event))
        {
            j["event"] = "remove";
            j["node"] = rm->node;
            j["tables_cleared"] = record.tables_cleared;
        }
        else
        {
            const auto& a = std::get<AddEvent>(record.event);
            j["event"] = "add";
            j["node"] = a.node;
            j["neighbors"] = a.neighbors;
            j["tables_cleared"] = record.tables_cleared;
        }
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string
metrics_json(const Metrics& m)
{
    Json j;
    j["schema_version"] = kSummarySchemaVersion;
    j["scenario"] = m.scenario;
    j["backend"] = to_string(m.backend);
    j["transfers"] = m.transfers;
    j["deliveries"] = m.deliveries;
    j["failures"] = m.failures;
    j["cache_hits"] = m.cache_hits;
    j["trained_deliveries"] = m.trained_deliveries;
    j["discoveries"] = m.discoveries;
    j["control_messages"] = m.control_messages;
    j["data_hops_total"] = m.data_hops_total;
    j["table_bytes"] = m.table_bytes();
    j["table_bytes_by_epoch"] = m.table_bytes_by_epoch;

    auto& tables = j["tables"] = Json::array();
    for (const auto& e : m.tables)
    {
        tables.push_back({e.owner, e.destination, e.ordinal});
    }
    auto& traffic = j["traffic"] = Json::array();
    for (const auto& c : m.traffic)
    {
        traffic.push_back({c.node, c.destination, c.count});
    }
    auto& pairs = j["hops_by_pair"] = Json::array();
    for (const auto& [pair, hops] : m.hops_by_pair)
    {
        pairs.push_back({{"source", pair.first}, {"destination", pair.second}, {"data_hops", hops}});
    }
    return j.dump(2) + "\n";
}

} // namespace bitroute
