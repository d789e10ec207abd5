#include "bdim/cli.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace bdim::cli {

namespace {

constexpr long long max_vertices = 1'000'000;

std::string strip_comment(std::string_view line)
{
    return std::string(line.substr(0, line.find('#')));
}

std::vector<long long> integers(const std::string& line, int line_no)
{
    std::vector<long long> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        out.push_back(v);
    }
    return out;
}

void check_edge(long long n, long long u, long long v, int line_no)
{
    for (long long x : {u, v})
        if (x < 0 || x >= n)
            throw ParseError(line_no, "endpoint " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    if (u == v)
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        auto values = integers(strip_comment(raw), line_no);
        if (values.empty())
            continue;
        if (values.size() != 2)
            throw ParseError(line_no, "expected two integers, got " + std::to_string(values.size()));
        if (n < 0) {
            n = values[0];
            m = values[1];
            if (n < 1 || n > max_vertices)
                throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
            if (m < 0)
                throw ParseError(line_no, "negative edge count");
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the declared m=" + std::to_string(m));
        check_edge(n, values[0], values[1], line_no);
        edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
    }
    if (n < 0)
        throw ParseError(0, "empty input: expected a header line 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "declared m=" + std::to_string(m) + " but found " + std::to_string(edges.size())
                                      + " edge lines");
    return build_graph(static_cast<int>(n), edges);
}

Graph parse_json_graph(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(0, "JSON graph needs an integer field \"n\"");
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > max_vertices)
        throw ParseError(0, "vertex count " + std::to_string(n) + " out of range");
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const auto& list = doc["edges"];
        if (!list.is_array())
            throw ParseError(0, "\"edges\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& e = list[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError(0, "edge " + std::to_string(i) + " is not a pair of integers");
            const long long u = e[0].get<long long>(), v = e[1].get<long long>();
            try {
                check_edge(n, u, v, 0);
            } catch (const ParseError& err) {
                throw ParseError(0, "edge " + std::to_string(i) + ": " + err.what());
            }
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    if (doc.contains("m") && doc["m"].is_number_integer()
        && doc["m"].get<long long>() != static_cast<long long>(edges.size()))
        throw ParseError(0, "declared m does not match the edge count");
    return build_graph(static_cast<int>(n), edges);
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t offset = 0; // start of the current line in text
    while (std::getline(in, raw)) {
        auto line = strip_comment(raw);
        auto pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) {
            offset += raw.size() + 1;
            continue;
        }
        // Leading comment lines are not JSON, so hand over the rest only.
        return line[pos] == '{' ? parse_json_graph(text.substr(offset + pos)) : parse_edge_list(text);
    }
    throw ParseError(0, "empty input");
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_graph_json(const Graph& g)
{
    nlohmann::json doc;
    doc["n"] = g.order();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back({u, v});
    return doc.dump() + "\n";
}

} // namespace bdim::cli
