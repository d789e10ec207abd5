#include "bdim/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace bdim {

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr FamilyName family_names[] = {
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::star, "star"},
    {Family::complete_multipartite, "kpartite"},
    {Family::wheel, "wheel"},
    {Family::fan, "fan"},
    {Family::petersen, "petersen"},
    {Family::grid, "grid"},
    {Family::logn_sharp, "logn_sharp"},
    {Family::logn_sharp_trimmed, "logn_sharp_trimmed"},
    {Family::subgraph_gap, "subgraph_gap"},
    {Family::vdel_gap, "vdel_gap"},
    {Family::edge_gap, "edge_gap"},
    {Family::spider, "spider"},
    {Family::kK2, "kK2"},
    {Family::kK2_plus_isolated, "kK2_plus_isolated"},
    {Family::grid_plus_apex, "grid_plus_apex"},
    {Family::random_graph, "random_graph"},
    {Family::random_tree, "random_tree"},
};

// Uniform double in [0,1) from the top 53 bits, independent of the standard
// library's distribution implementations.
double unit_interval(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require(bool condition, const std::string& message)
{
    if (!condition)
        throw InvalidParameters(message);
}

int checked_int(const FamilySpec& spec, const std::string& name, long long lo, long long hi)
{
    long long v = spec.integer(name);
    require(v >= lo && v <= hi, "parameter " + name + "=" + std::to_string(v) + " outside [" + std::to_string(lo)
                                    + ", " + std::to_string(hi) + "] for family " + std::string(to_string(spec.family)));
    return static_cast<int>(v);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return build_graph(n, edges);
}

Graph cycle_graph(int n)
{
    auto edges = path_graph(n).edges();
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph empty_graph(int n)
{
    return build_graph(n, std::span<const Edge>{});
}

Graph multipartite(const std::vector<int>& parts)
{
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        edges.emplace_back(i, i + 5);
    }
    return build_graph(10, edges);
}

Graph grid_graph(const std::vector<int>& dims)
{
    Graph g = path_graph(dims.front());
    for (std::size_t i = 1; i < dims.size(); ++i)
        g = cartesian_product(g, path_graph(dims[i]));
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit_interval(rng) < p)
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// Decodes a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed)
{
    if (n <= 2)
        return path_graph(n);
    std::mt19937_64 rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code)
        c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(n, 1);
    for (int c : code)
        ++degree[c];
    std::vector<Edge> edges;
    for (int c : code) {
        Vertex leaf = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
    }
    Vertex u = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    Vertex v = static_cast<Vertex>(std::find(degree.begin() + u + 1, degree.end(), 1) - degree.begin());
    edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph logn_sharp(int k)
{
    return bits_construction(complete_graph(k), complete_graph(1 << k));
}

Graph logn_sharp_trimmed(int n)
{
    int k = 1;
    while (k + (1 << k) < n)
        ++k;
    Graph full = logn_sharp(k);
    std::vector<Vertex> keep(n);
    for (Vertex v = 0; v < n; ++v)
        keep[v] = v;
    return induced_subgraph(full, keep);
}

Graph subgraph_gap(int k)
{
    const int clique = k * (k + 1) / 2;
    auto w = [](int i, int j) { return i * (i - 1) / 2 + (j - 1); }; // w_{i,j}, 1-based
    std::vector<Edge> edges = complete_graph(clique).edges();
    for (int i = 1; i <= k; ++i) {
        const Vertex u = clique + i - 1;
        for (int j = 1; j <= i; ++j)
            edges.emplace_back(u, w(i, j));
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back(u, w(j, i));
    }
    return build_graph(clique + k, edges);
}

Graph vdel_gap(int k)
{
    const int n = 3 * k + 2;
    const Vertex v = n - 1;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const Vertex x = 1 + 3 * i, y = x + 1, z = x + 2;
        edges.insert(edges.end(), {{x, y}, {y, z}, {x, z}, {0, x}, {0, y}, {0, z}, {v, y}});
    }
    return build_graph(n, edges);
}

Graph edge_gap(int a, int b, int c)
{
    const int n = 3 + a + b + c;
    std::vector<Edge> edges{{0, 1}, {1, 2}};
    Vertex next = 3;
    for (int i = 0; i < a; ++i)
        edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i)
        edges.emplace_back(1, next++);
    for (int i = 0; i < c; ++i)
        edges.emplace_back(2, next++);
    edges.emplace_back(3, 3 + a + b);
    return build_graph(n, edges);
}

Graph spider(int x, int s)
{
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int leg = 0; leg < x; ++leg) {
        edges.emplace_back(0, next);
        if (leg < s) {
            edges.emplace_back(next, next + 1);
            ++next;
        }
        ++next;
    }
    return build_graph(next, edges);
}

Graph matching(int k, bool isolated)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.emplace_back(2 * i, 2 * i + 1);
    return build_graph(2 * k + (isolated ? 1 : 0), edges);
}

} // namespace

std::string_view to_string(Family f)
{
    for (const auto& entry : family_names)
        if (entry.family == f)
            return entry.name;
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (const auto& entry : family_names)
        if (entry.name == name)
            return entry.family;
    if (name == "complete_multipartite")
        return Family::complete_multipartite;
    throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families()
{
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& entry : family_names)
            out.push_back(entry.family);
        return out;
    }();
    return families;
}

FamilySpec FamilySpec::parse(std::string_view family, std::string_view assignments)
{
    FamilySpec spec(parse_family(family));
    // Split on whitespace and ';'. Commas separate assignments too unless the
    // token after the comma has no '=', in which case it continues a list.
    std::string text(assignments);
    std::replace(text.begin(), text.end(), ';', ' ');
    std::istringstream in(text);
    std::string token;
    std::string current_key;
    while (in >> token) {
        std::stringstream pieces(token);
        std::string piece;
        while (std::getline(pieces, piece, ',')) {
            if (piece.empty())
                continue;
            auto eq = piece.find('=');
            if (eq != std::string::npos) {
                current_key = piece.substr(0, eq);
                if (current_key.empty())
                    throw InvalidParameters("empty parameter name in '" + token + "'");
                spec.params[current_key] = piece.substr(eq + 1);
            } else if (!current_key.empty()) {
                spec.params[current_key] += "," + piece;
            } else {
                throw InvalidParameters("expected name=value, got '" + piece + "'");
            }
        }
    }
    return spec;
}

long long FamilySpec::integer(const std::string& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw InvalidParameters("missing parameter '" + name + "' for family " + std::string(to_string(family)));
    long long value = 0;
    const auto& text = it->second;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidParameters("parameter '" + name + "' is not an integer: '" + text + "'");
    return value;
}

std::uint64_t FamilySpec::seed() const
{
    auto it = params.find("seed");
    if (it == params.end())
        return 0;
    std::uint64_t value = 0;
    const auto& text = it->second;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidParameters("parameter 'seed' is not an unsigned 64-bit integer: '" + text + "'");
    return value;
}

long long FamilySpec::integer_or(const std::string& name, long long fallback) const
{
    return has(name) ? integer(name) : fallback;
}

double FamilySpec::real(const std::string& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw InvalidParameters("missing parameter '" + name + "' for family " + std::string(to_string(family)));
    try {
        std::size_t used = 0;
        double value = std::stod(it->second, &used);
        if (used != it->second.size())
            throw InvalidParameters("parameter '" + name + "' is not a number");
        return value;
    } catch (const std::logic_error&) {
        throw InvalidParameters("parameter '" + name + "' is not a number: '" + it->second + "'");
    }
}

std::vector<int> FamilySpec::list(const std::string& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw InvalidParameters("missing parameter '" + name + "' for family " + std::string(to_string(family)));
    std::vector<int> out;
    std::stringstream in(it->second);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw InvalidParameters("parameter '" + name + "' is not an integer list: '" + it->second + "'");
        out.push_back(value);
    }
    return out;
}

std::string FamilySpec::describe() const
{
    std::string out(to_string(family));
    for (const auto& [key, value] : params)
        out += " " + key + "=" + value;
    return out;
}

Graph generate(const FamilySpec& spec)
{
    constexpr long long max_order = 4096;
    switch (spec.family) {
    case Family::path: return path_graph(checked_int(spec, "n", 1, max_order));
    case Family::cycle: return cycle_graph(checked_int(spec, "n", 3, max_order));
    case Family::complete: return complete_graph(checked_int(spec, "n", 1, max_order));
    case Family::empty: return empty_graph(checked_int(spec, "n", 1, max_order));
    case Family::star: {
        int x = checked_int(spec, "x", 1, max_order);
        return spider(x, 0);
    }
    case Family::complete_multipartite: {
        auto parts = spec.list("parts");
        require(parts.size() >= 2, "complete multipartite graph needs at least two parts");
        for (int a : parts)
            require(a >= 1 && a <= max_order, "partite set sizes must be positive");
        return multipartite(parts);
    }
    case Family::wheel: return join(cycle_graph(checked_int(spec, "n", 3, max_order)), complete_graph(1));
    case Family::fan: return join(path_graph(checked_int(spec, "n", 1, max_order)), complete_graph(1));
    case Family::petersen: return petersen_graph();
    case Family::grid: {
        auto dims = spec.list("dims");
        require(!dims.empty(), "grid needs at least one dimension");
        long long total = 1;
        for (int a : dims) {
            require(a >= 1, "grid dimensions must be positive");
            total *= a;
            require(total <= max_order, "grid too large");
        }
        return grid_graph(dims);
    }
    case Family::logn_sharp: return logn_sharp(checked_int(spec, "k", 1, 10));
    case Family::logn_sharp_trimmed: return logn_sharp_trimmed(checked_int(spec, "n", 1, 10 + 1024));
    case Family::subgraph_gap: return subgraph_gap(checked_int(spec, "k", 3, 60));
    case Family::vdel_gap: return vdel_gap(checked_int(spec, "k", 2, 1000));
    case Family::edge_gap: {
        int a = checked_int(spec, "a", 3, 1000);
        int b = checked_int(spec, "b", 2, 1000);
        int c = checked_int(spec, "c", 3, 1000);
        return edge_gap(a, b, c);
    }
    case Family::spider: {
        int x = checked_int(spec, "x", 1, max_order);
        int s = checked_int(spec, "s", 0, x);
        return spider(x, s);
    }
    case Family::kK2: return matching(checked_int(spec, "k", 1, max_order), false);
    case Family::kK2_plus_isolated: return matching(checked_int(spec, "k", 1, max_order), true);
    case Family::grid_plus_apex: {
        int k = checked_int(spec, "k", 2, 64);
        return join(grid_graph({k, k}), complete_graph(1));
    }
    case Family::random_graph: {
        int n = checked_int(spec, "n", 1, max_order);
        double p = spec.real("p");
        require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
        return random_graph(n, p, spec.seed());
    }
    case Family::random_tree:
        return random_tree(checked_int(spec, "n", 1, max_order),
                           spec.seed());
    }
    throw UnknownFamily("unhandled family");
}

Graph bits_construction(const Graph& g1, const Graph& g2)
{
    const int k = g1.order();
    if (k < 1 || k > 20 || g2.order() != (1 << k))
        throw InvalidParameters("bits construction needs G1 on k >= 1 vertices and G2 on 2^k vertices");
    std::vector<Edge> edges = disjoint_union(g1, g2).edges();
    for (int b = 0; b < (1 << k); ++b)
        for (int i = 0; i < k; ++i)
            if ((b >> (k - 1 - i)) & 1)
                edges.emplace_back(i, k + b);
    return build_graph(k + (1 << k), edges);
}

Graph sample_Hk(int k, std::uint64_t seed)
{
    if (k < 1 || k > 10)
        throw InvalidParameters("sample_Hk needs 1 <= k <= 10");
    std::mt19937_64 rng(seed);
    const int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    Graph g1 = random_graph(j, 0.5, rng());
    Graph g2 = random_graph(1 << j, 0.5, rng());
    Graph full = bits_construction(g1, g2);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < j; ++v)
        keep.push_back(v);
    for (Vertex u = j; u < full.order(); ++u)
        if (rng() & 1)
            keep.push_back(u);
    return induced_subgraph(full, keep);
}

std::uint64_t labeled_graph_count(int n)
{
    const int pairs = n * (n - 1) / 2;
    if (pairs >= 64)
        throw std::out_of_range("too many labeled graphs to count");
    return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1)
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

} // namespace bdim
