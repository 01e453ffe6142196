#pragma once

#include "bitroute/errors.hpp"
#include "bitroute/scenario.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bitroute
{

/**
 * Plain-text sectioned scenario files:
 *
 *     # comment
 *     [graph]
 *     nodes = 5
 *     edges = 1-3 1-4 2-4 3-5 4-5     # repeatable; "i-j" or "i-j:weight"
 *     # or, instead of edges, a random graph:
 *     # edge_prob = 0.4
 *
 *     [run]
 *     name = desk
 *     backend = link_state            # link_state | flood
 *     seed = 7
 *
 *     [workload]                      # optional random events
 *     transfers = 100
 *     pairs = 20
 *     churn = 0
 *     partition = false
 *
 *     [events]
 *     transfer 1 2
 *     remove 4
 *     add 6: 1 3
 */

struct ParseOptions
{
    /// Reject unknown keys instead of warning about them.
    bool strict = false;
};

struct ParsedScenario
{
    Scenario scenario;
    std::vector<Diagnostic> warnings;
};

/// Throws ScenarioError with line-numbered diagnostics.
ParsedScenario parse_scenario(std::string_view text, ParseOptions options = {});

/// Canonical text form; parse_scenario(print_scenario(s)).scenario == s.
std::string print_scenario(const Scenario& scenario);

/// Reads and parses a file; I/O failures become ScenarioError as well.
ParsedScenario load_scenario(const std::string& path, ParseOptions options = {});

} // namespace bitroute
