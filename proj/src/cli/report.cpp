#include "bdim/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace bdim::cli {

namespace {

using nlohmann::json;

void validate_set(const Graph& g, const DistanceMatrix& d, const SolverResult& r, const VertexSet& s)
{
    if (static_cast<int>(s.size()) != r.value)
        throw std::logic_error("witness size differs from the reported value");
    Verdict verdict;
    switch (r.parameter) {
    case Parameter::dim: verdict = is_resolving_set(g, d, s); break;
    case Parameter::adim: verdict = is_adjacency_resolving_set(g, d, s); break;
    case Parameter::dim_k: verdict = is_distance_k_resolving_set(g, d, s, r.k); break;
    case Parameter::bdim: throw std::logic_error("bdim result carries a vertex set");
    }
    if (!verdict)
        throw std::logic_error("witness does not resolve the graph");
}

void validate_broadcast(const Graph& g, const DistanceMatrix& d, int value, const Broadcast& f)
{
    if (f.cost() != value)
        throw std::logic_error("witness cost differs from the reported value");
    if (!is_resolving_broadcast(g, d, f))
        throw std::logic_error("witness broadcast does not resolve the graph");
}

BoundStatus parse_status(const std::string& s)
{
    for (auto st : {BoundStatus::holds, BoundStatus::violated, BoundStatus::not_applicable, BoundStatus::informational})
        if (to_string(st) == s)
            return st;
    throw std::invalid_argument("unknown bound status '" + s + "'");
}

} // namespace

Report make_report(const Graph& g, std::string input, const SolverResult& result, double elapsed_ms)
{
    const auto d = all_pairs_distances(g);
    Report r;
    r.input = std::move(input);
    r.parameter = std::string(to_string(result.parameter));
    r.k = result.k;
    r.value = result.value;
    if (const auto* s = std::get_if<VertexSet>(&result.witness)) {
        validate_set(g, d, result, *s);
        r.witness_kind = "set";
        r.witness = *s;
    } else {
        const auto& f = std::get<Broadcast>(result.witness);
        validate_broadcast(g, d, result.value, f);
        r.witness_kind = "broadcast";
        r.witness = f.values();
    }
    r.elapsed_ms = elapsed_ms;
    r.stats["candidates_examined"] = result.candidates_examined;
    r.stats["lower_bound_used"] = result.lower_bound_used;
    return r;
}

Report make_enumeration_report(const Graph& g, std::string input, const EnumerationResult& result, double elapsed_ms)
{
    const auto d = all_pairs_distances(g);
    Report r;
    r.input = std::move(input);
    r.parameter = "enum-min";
    r.value = result.cost;
    r.witness_kind = "broadcast";
    std::vector<std::vector<int>> all;
    for (const auto& f : result.broadcasts) {
        validate_broadcast(g, d, result.cost, f);
        all.push_back(f.values());
    }
    if (!all.empty())
        r.witness = all.front();
    r.all_witnesses = std::move(all);
    r.elapsed_ms = elapsed_ms;
    r.stats["candidates_examined"] = result.candidates_examined;
    r.stats["minimum_count"] = static_cast<long long>(result.broadcasts.size());
    return r;
}

std::string serialize(const Report& r)
{
    json doc;
    doc["schema"] = report_schema;
    doc["version"] = r.version;
    doc["input"] = r.input;
    doc["parameter"] = r.parameter;
    doc["k"] = r.k;
    doc["value"] = r.value;
    doc["witness_kind"] = r.witness_kind;
    doc["witness"] = r.witness;
    if (r.all_witnesses)
        doc["all_witnesses"] = *r.all_witnesses;
    doc["elapsed_ms"] = r.elapsed_ms;
    doc["stats"] = r.stats;
    if (r.bounds) {
        json records = json::array();
        for (const auto& b : r.bounds->records)
            records.push_back({{"id", b.id},
                               {"lhs", b.lhs},
                               {"rhs", b.rhs},
                               {"status", to_string(b.status)},
                               {"citation", b.citation}});
        doc["bounds"] = std::move(records);
    }
    return doc.dump(2) + "\n";
}

Report parse_report(std::string_view text)
{
    const json doc = json::parse(text);
    if (doc.value("schema", std::string()) != report_schema)
        throw std::invalid_argument("unsupported report schema");
    Report r;
    r.version = doc.at("version").get<std::string>();
    r.input = doc.at("input").get<std::string>();
    r.parameter = doc.at("parameter").get<std::string>();
    r.k = doc.at("k").get<int>();
    r.value = doc.at("value").get<int>();
    r.witness_kind = doc.at("witness_kind").get<std::string>();
    r.witness = doc.at("witness").get<std::vector<int>>();
    if (doc.contains("all_witnesses"))
        r.all_witnesses = doc["all_witnesses"].get<std::vector<std::vector<int>>>();
    r.elapsed_ms = doc.at("elapsed_ms").get<double>();
    r.stats = doc.at("stats").get<std::map<std::string, long long>>();
    if (doc.contains("bounds")) {
        BoundReport b;
        for (const auto& rec : doc["bounds"])
            b.records.push_back({rec.at("id").get<std::string>(), rec.at("lhs").get<long long>(),
                                 rec.at("rhs").get<long long>(), parse_status(rec.at("status").get<std::string>()),
                                 rec.at("citation").get<std::string>()});
        r.bounds = std::move(b);
    }
    return r;
}

std::string render_text(const Report& r)
{
    std::ostringstream out;
    auto list = [&out](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << v[i];
    };
    out << r.parameter;
    if (r.parameter == "dimk")
        out << " (k=" << r.k << ")";
    out << " = " << r.value << "\n";
    out << "input: " << r.input << "\n";
    out << "witness (" << r.witness_kind << "): ";
    list(r.witness);
    out << "\n";
    if (r.all_witnesses) {
        out << "minimum broadcasts: " << r.all_witnesses->size() << "\n";
        for (const auto& w : *r.all_witnesses) {
            out << "  ";
            list(w);
            out << "\n";
        }
    }
    for (const auto& [key, value] : r.stats)
        out << key << ": " << value << "\n";
    if (r.bounds)
        for (const auto& b : r.bounds->records)
            out << "bound " << b.id << ": " << b.lhs << " <= " << b.rhs << " " << to_string(b.status) << "\n";
    out << "elapsed_ms: " << r.elapsed_ms << "\n";
    return out.str();
}

} // namespace bdim::cli
