#pragma once

#include "bitroute/simulator.hpp"

#include <string>
#include <string_view>

namespace bitroute
{

/// Bumped whenever the summary columns change.
inline constexpr int kSummarySchemaVersion = 1;

/// scenario,backend,transfers,deliveries,cache_hits,discoveries,
/// control_messages,data_hops_total,table_bytes
std::string_view summary_csv_header() noexcept;

/// One summary row (no trailing newline).
std::string summary_csv_row(const Metrics& metrics);

/// One JSON object per line, one line per executed event.
std::string event_log_jsonl(const RunResult& run);

/// Full metrics dump as pretty-printed JSON: totals, table footprint per
/// epoch, trained entries as [owner, destination, ordinal] triples, traffic
/// counters and per-pair hop series.
std::string metrics_json(const Metrics& metrics);

} // namespace bitroute
