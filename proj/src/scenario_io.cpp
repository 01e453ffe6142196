#include "bitroute/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <fstream>
#include <set>
#include <sstream>

namespace bitroute
{

namespace
{

constexpr std::size_t kEdgesPerLine = 12;

std::string_view
trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
    {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view>
split_words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size())
    {
        const auto start = s.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos)
        {
            break;
        }
        const auto end = s.find_first_of(" \t\r", start);
        out.push_back(s.substr(start, end == std::string_view::npos ? s.size() - start : end - start));
        pos = end == std::string_view::npos ? s.size() : end;
    }
    return out;
}

template <typename T>
std::optional<T>
parse_unsigned(std::string_view s)
{
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end)
    {
        return std::nullopt;
    }
    return value;
}

std::optional<double>
parse_real(std::string_view s)
{
    double value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end)
    {
        return std::nullopt;
    }
    return value;
}

std::string
format_real(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool
valid_name(std::string_view name)
{
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

class Parser
{
  public:
    explicit Parser(ParseOptions options)
        : m_options(options)
    {
    }

    ParsedScenario parse(std::string_view text)
    {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const auto nl = text.find('\n', pos);
            auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
            {
                line = line.substr(0, hash);
            }
            line = trim(line);
            if (!line.empty())
            {
                parse_line(line_no, line);
            }
        }
        finish();
        if (!m_errors.empty())
        {
            throw ScenarioError(std::move(m_errors));
        }
        return {std::move(m_scenario), std::move(m_warnings)};
    }

  private:
    void error(std::size_t line, std::string message)
    {
        m_errors.push_back({line, std::move(message)});
    }

    void parse_line(std::size_t line_no, std::string_view line)
    {
        if (line.front() == '[')
        {
            if (line.back() != ']')
            {
                error(line_no, "unterminated section header '" + std::string(line) + "'");
                return;
            }
            const auto name = std::string(trim(line.substr(1, line.size() - 2)));
            if (name != "graph" && name != "run" && name != "workload" && name != "events")
            {
                error(line_no, "unknown section [" + name + "]");
                m_section.clear();
                m_skipSection = true;
                return;
            }
            if (!m_sections.insert(name).second)
            {
                error(line_no, "section [" + name + "] appears twice");
            }
            m_section = name;
            m_skipSection = false;
            if (name == "graph")
            {
                m_graphLine = line_no;
            }
            if (name == "workload")
            {
                m_scenario.workload = Workload{};
            }
            return;
        }
        if (m_skipSection)
        {
            return;
        }
        if (m_section.empty())
        {
            error(line_no, "content before the first section header");
            return;
        }
        if (m_section == "events")
        {
            parse_event(line_no, line);
            return;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            error(line_no, "expected 'key = value'");
            return;
        }
        const auto key = std::string(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        const auto qualified = m_section + "." + key;
        if (key != "edges" && !m_keys.insert(qualified).second)
        {
            error(line_no, "key '" + key + "' repeated in [" + m_section + "]");
            return;
        }

        if (m_section == "graph")
        {
            parse_graph_key(line_no, key, value);
        }
        else if (m_section == "run")
        {
            parse_run_key(line_no, key, value);
        }
        else
        {
            parse_workload_key(line_no, key, value);
        }
    }

    void unknown_key(std::size_t line_no, const std::string& key)
    {
        const auto message = "unknown key '" + key + "' in [" + m_section + "]";
        if (m_options.strict)
        {
            error(line_no, message);
        }
        else
        {
            m_warnings.push_back({line_no, message});
        }
    }

    template <typename T>
    bool read_count(std::size_t line_no, std::string_view key, std::string_view value, T& out)
    {
        if (const auto v = parse_unsigned<T>(value))
        {
            out = *v;
            return true;
        }
        error(line_no, "'" + std::string(key) + "' needs a non-negative integer, got '" +
                           std::string(value) + "'");
        return false;
    }

    void parse_graph_key(std::size_t line_no, const std::string& key, std::string_view value)
    {
        if (key == "nodes")
        {
            std::size_t n = 0;
            if (!read_count(line_no, key, value, n))
            {
                return;
            }
            if (n == 0)
            {
                error(line_no, "'nodes' must be positive");
                return;
            }
            m_nodes = n;
        }
        else if (key == "edges")
        {
            for (auto token : split_words(value))
            {
                parse_edge(line_no, token);
            }
            m_hasEdges = true;
        }
        else if (key == "edge_prob")
        {
            const auto p = parse_real(value);
            if (!p || !(*p > 0.0 && *p <= 1.0))
            {
                error(line_no, "'edge_prob' must be a number in (0, 1], got '" + std::string(value) +
                                   "'");
                return;
            }
            m_edgeProb = *p;
        }
        else
        {
            unknown_key(line_no, key);
        }
    }

    void parse_edge(std::size_t line_no, std::string_view token)
    {
        const auto bad = [&] { error(line_no, "malformed edge '" + std::string(token) + "'"); };
        const auto dash = token.find('-');
        if (dash == std::string_view::npos)
        {
            bad();
            return;
        }
        auto rest = token.substr(dash + 1);
        double weight = 1.0;
        if (const auto colon = rest.find(':'); colon != std::string_view::npos)
        {
            const auto w = parse_real(rest.substr(colon + 1));
            if (!w)
            {
                bad();
                return;
            }
            weight = *w;
            rest = rest.substr(0, colon);
        }
        const auto a = parse_unsigned<NodeId>(token.substr(0, dash));
        const auto b = parse_unsigned<NodeId>(rest);
        if (!a || !b)
        {
            bad();
            return;
        }
        m_edges.push_back({{*a, *b, weight}, line_no});
    }

    void parse_run_key(std::size_t line_no, const std::string& key, std::string_view value)
    {
        if (key == "name")
        {
            if (!valid_name(value))
            {
                error(line_no, "'name' may only use letters, digits, '_', '-' and '.'");
                return;
            }
            m_scenario.name = std::string(value);
        }
        else if (key == "backend")
        {
            if (const auto b = parse_backend(value))
            {
                m_scenario.backend = *b;
            }
            else
            {
                error(line_no, "unknown backend '" + std::string(value) +
                                   "' (expected link_state or flood)");
            }
        }
        else if (key == "seed")
        {
            read_count(line_no, key, value, m_scenario.seed);
        }
        else
        {
            unknown_key(line_no, key);
        }
    }

    void parse_workload_key(std::size_t line_no, const std::string& key, std::string_view value)
    {
        auto& w = *m_scenario.workload;
        if (key == "transfers")
        {
            read_count(line_no, key, value, w.transfers);
        }
        else if (key == "pairs")
        {
            read_count(line_no, key, value, w.pairs);
        }
        else if (key == "churn")
        {
            read_count(line_no, key, value, w.churn);
        }
        else if (key == "partition")
        {
            if (value == "true" || value == "false")
            {
                w.allow_partition = value == "true";
            }
            else
            {
                error(line_no, "'partition' must be true or false");
            }
        }
        else
        {
            unknown_key(line_no, key);
        }
    }

    void parse_event(std::size_t line_no, std::string_view line)
    {
        const auto words = split_words(line);
        const auto verb = words.front();
        const auto id = [&](std::string_view s) -> std::optional<NodeId> {
            auto v = parse_unsigned<NodeId>(s);
            if (!v || *v == 0)
            {
                error(line_no, "bad node id '" + std::string(s) + "'");
                return std::nullopt;
            }
            return v;
        };

        if (verb == "transfer")
        {
            if (words.size() != 3)
            {
                error(line_no, "expected 'transfer <source> <destination>'");
                return;
            }
            const auto s = id(words[1]);
            const auto d = id(words[2]);
            if (s && d)
            {
                push_event(line_no, TransferEvent{*s, *d});
            }
        }
        else if (verb == "remove")
        {
            if (words.size() != 2)
            {
                error(line_no, "expected 'remove <node>'");
                return;
            }
            if (const auto v = id(words[1]))
            {
                push_event(line_no, RemoveEvent{*v});
            }
        }
        else if (verb == "add")
        {
            const auto rest = trim(line.substr(3));
            const auto colon = rest.find(':');
            if (colon == std::string_view::npos)
            {
                error(line_no, "expected 'add <node>: <neighbors...>'");
                return;
            }
            const auto v = id(trim(rest.substr(0, colon)));
            AddEvent add;
            bool ok = v.has_value();
            for (auto token : split_words(rest.substr(colon + 1)))
            {
                if (const auto u = id(token))
                {
                    add.neighbors.push_back(*u);
                }
                else
                {
                    ok = false;
                }
            }
            if (ok)
            {
                add.node = *v;
                push_event(line_no, std::move(add));
            }
        }
        else
        {
            error(line_no, "unknown event '" + std::string(verb) +
                               "' (expected transfer, remove or add)");
        }
    }

    void push_event(std::size_t line_no, Event event)
    {
        m_scenario.events.push_back(std::move(event));
        m_eventLines.push_back(line_no);
    }

    void finish()
    {
        if (!m_sections.contains("graph"))
        {
            error(0, "missing [graph] section");
            return;
        }
        if (!m_nodes)
        {
            error(m_graphLine, "[graph] needs 'nodes'");
            return;
        }
        if (m_hasEdges && m_edgeProb)
        {
            error(m_graphLine, "[graph] takes either 'edges' or 'edge_prob', not both");
            return;
        }
        if (m_edgeProb)
        {
            if (*m_nodes < 2)
            {
                error(m_graphLine, "a random graph needs at least 2 nodes");
            }
            m_scenario.graph = RandomGraph{*m_nodes, *m_edgeProb};
            return;
        }

        ExplicitGraph graph{*m_nodes, {}};
        std::set<std::pair<NodeId, NodeId>> seen;
        for (const auto& [e, line_no] : m_edges)
        {
            const auto text = std::to_string(e.a) + "-" + std::to_string(e.b);
            if (e.a < 1 || e.a > *m_nodes || e.b < 1 || e.b > *m_nodes)
            {
                error(line_no, "edge " + text + " references a node outside 1.." +
                                   std::to_string(*m_nodes));
            }
            else if (e.a == e.b)
            {
                error(line_no, "edge " + text + " is a self-loop");
            }
            else if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second)
            {
                error(line_no, "edge " + text + " is listed twice");
            }
            else if (!(e.weight > 0.0))
            {
                error(line_no, "edge " + text + " needs a positive weight");
            }
            graph.edges.push_back(e);
        }
        if (!m_errors.empty())
        {
            return;
        }
        for (const auto& p : validate_events(Graph::build(graph.node_count, graph.edges),
                                             m_scenario.events))
        {
            error(m_eventLines[p.index], p.message);
        }
        m_scenario.graph = std::move(graph);
    }

    ParseOptions m_options;
    Scenario m_scenario;
    std::vector<Diagnostic> m_errors;
    std::vector<Diagnostic> m_warnings;

    std::string m_section;
    bool m_skipSection = false;
    std::set<std::string> m_sections;
    std::set<std::string> m_keys;
    std::size_t m_graphLine = 0;
    std::optional<std::size_t> m_nodes;
    std::optional<double> m_edgeProb;
    bool m_hasEdges = false;
    std::vector<std::pair<EdgeSpec, std::size_t>> m_edges;
    std::vector<std::size_t> m_eventLines;
};

} // namespace

ParsedScenario
parse_scenario(std::string_view text, ParseOptions options)
{
    return Parser(options).parse(text);
}

std::string
print_scenario(const Scenario& scenario)
{
    std::ostringstream out;
    out << "[graph]\n";
    if (const auto* ex = std::get_if<ExplicitGraph>(&scenario.graph))
    {
        out << "nodes = " << ex->node_count << "\n";
        for (std::size_t i = 0; i < ex->edges.size(); ++i)
        {
            const auto& e = ex->edges[i];
            out << (i % kEdgesPerLine == 0 ? (i == 0 ? "edges = " : "\nedges = ") : " ");
            out << e.a << "-" << e.b;
            if (e.weight != 1.0)
            {
                out << ":" << format_real(e.weight);
            }
        }
        if (!ex->edges.empty())
        {
            out << "\n";
        }
    }
    else
    {
        const auto& rg = std::get<RandomGraph>(scenario.graph);
        out << "nodes = " << rg.node_count << "\n";
        out << "edge_prob = " << format_real(rg.edge_prob) << "\n";
    }

    out << "\n[run]\n";
    out << "name = " << scenario.name << "\n";
    out << "backend = " << to_string(scenario.backend) << "\n";
    out << "seed = " << scenario.seed << "\n";

    if (scenario.workload)
    {
        const auto& w = *scenario.workload;
        out << "\n[workload]\n";
        out << "transfers = " << w.transfers << "\n";
        out << "pairs = " << w.pairs << "\n";
        out << "churn = " << w.churn << "\n";
        out << "partition = " << (w.allow_partition ? "true" : "false") << "\n";
    }

    out << "\n[events]\n";
    for (const auto& event : scenario.events)
    {
        if (const auto* t = std::get_if<TransferEvent>(&event))
        {
            out << "transfer " << t->source << " " << t->destination << "\n";
        }
        else if (const auto* r = std::get_if<RemoveEvent>(&event))
        {
            out << "remove " << r->node << "\n";
        }
        else
        {
            const auto& a = std::get<AddEvent>(event);
            out << "add " << a.node << ":";
            for (NodeId u : a.neighbors)
            {
                out << " " << u;
            }
            out << "\n";
        }
    }
    return out.str();
}

ParsedScenario
load_scenario(const std::string& path, ParseOptions options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw ScenarioError({{0, "cannot read scenario file '" + path + "'"}});
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), options);
}

} // namespace bitroute
