#include "bdim/graph.hpp"

#include <algorithm>
#include <queue>

namespace bdim {

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& nu = adjacency_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");

    Graph g;
    g.adjacency_.assign(n, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge(i, "edge " + std::to_string(i) + ": endpoint out of range (" + std::to_string(u)
                                     + ", " + std::to_string(v) + ") for n=" + std::to_string(n));
        if (u == v)
            throw InvalidEdge(i, "edge " + std::to_string(i) + ": self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }

    std::size_t half_degrees = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        half_degrees += list.size();
    }
    g.edge_count_ = half_degrees / 2;
    return g;
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return build_graph(g.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    auto edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + g.order(), v + g.order());
    return build_graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h)
{
    auto edges = disjoint_union(g, h).edges();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v)
            edges.emplace_back(u, g.order() + v);
    return build_graph(g.order() + h.order(), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int m = h.order();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [b1, b2] : h.edges())
            edges.emplace_back(a * m + b1, a * m + b2);
    for (auto [a1, a2] : g.edges())
        for (Vertex b = 0; b < m; ++b)
            edges.emplace_back(a1 * m + b, a2 * m + b);
    return build_graph(g.order() * m, edges);
}

Graph compose(Composition kind, const Graph& g, const std::optional<Graph>& h)
{
    if (kind == Composition::complement)
        return complement(g);
    if (!h)
        throw std::invalid_argument("binary composition requires a second graph");
    switch (kind) {
    case Composition::join: return join(g, *h);
    case Composition::disjoint_union: return disjoint_union(g, *h);
    case Composition::cartesian_product: return cartesian_product(g, *h);
    case Composition::complement: break;
    }
    return complement(g);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        if (index[keep[i]] != -1)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        index[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1)
            edges.emplace_back(index[u], index[v]);
    return build_graph(static_cast<int>(keep.size()), edges);
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    std::vector<bool> seen(g.order(), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push(w);
            }
    }
    return reached == g.order();
}

int max_degree(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

namespace {

void expand_clique(const Graph& g, std::vector<Vertex>& candidates, int size, int& best)
{
    if (candidates.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!candidates.empty()) {
        if (size + static_cast<int>(candidates.size()) <= best)
            return;
        Vertex v = candidates.back();
        candidates.pop_back();
        std::vector<Vertex> next;
        for (Vertex w : candidates)
            if (g.adjacent(v, w))
                next.push_back(w);
        expand_clique(g, next, size + 1, best);
    }
}

} // namespace

int clique_number(const Graph& g)
{
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        all[v] = v;
    int best = 0;
    expand_clique(g, all, 0, best);
    return best;
}

} // namespace bdim
