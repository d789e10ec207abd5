#pragma once

#include "bdim/graph.hpp"

#include <vector>

namespace bdim {

// All-pairs shortest-path lengths. Unreachable pairs hold infinity(), which
// equals the order n and so exceeds every finite distance.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, n) {}

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int infinity() const noexcept { return n_; }
    [[nodiscard]] int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
    [[nodiscard]] bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) < n_; }

    void set(Vertex u, Vertex v, int d) { dist_[index(u, v)] = d; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * n_ + v;
    }

    int n_ = 0;
    std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// min(d(x,y), k+1); the infinity sentinel maps to k+1. Throws for k < 1.
int truncated_distance(const DistanceMatrix& d, Vertex x, Vertex y, int k);

struct MetricProfile {
    std::vector<int> eccentricity;        // over reachable vertices only
    std::vector<int> component;           // component id per vertex, numbered in order of smallest member
    int component_count = 0;
    int finite_diameter = 0;              // max finite distance
    bool connected = true;                // diameter is infinite when false

    friend bool operator==(const MetricProfile&, const MetricProfile&) = default;
};

MetricProfile metric_profile(const Graph& g, const DistanceMatrix& d);

struct TwinPartition {
    std::vector<Edge> pairs;                // (u,w), u < w, ascending
    std::vector<std::vector<Vertex>> groups; // pairwise-twin groups, each sorted, ordered by first vertex
    std::vector<int> group_of;              // group index per vertex
};

[[nodiscard]] bool are_twins(const Graph& g, Vertex u, Vertex w);
TwinPartition twin_partition(const Graph& g);

// Largest number of vertices sharing one finite distance j >= 1 from a single vertex.
int delta_prime(const Graph& g, const DistanceMatrix& d);

} // namespace bdim
