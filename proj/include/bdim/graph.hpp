#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

// Raised by build_graph for an out-of-range endpoint or a self-loop.
class InvalidEdge : public std::invalid_argument {
public:
    InvalidEdge(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}

    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted ascending and symmetric.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    // Edges (u,v) with u < v in ascending order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Duplicate edges (in either orientation) collapse to one.
Graph build_graph(int n, std::span<const Edge> edges);

inline Graph build_graph(int n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

enum class Composition { complement, join, disjoint_union, cartesian_product };

// Vertices of g precede those of h in join and disjoint_union; product vertex
// (a,b) gets id a*|h|+b.
Graph compose(Composition kind, const Graph& g, const std::optional<Graph>& h = std::nullopt);

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);

// Subgraph induced by `keep` (any order); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] int max_degree(const Graph& g);
[[nodiscard]] int clique_number(const Graph& g);

} // namespace bdim
