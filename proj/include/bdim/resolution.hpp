#pragma once

#include "bdim/graph.hpp"
#include "bdim/metric.hpp"

#include <optional>
#include <vector>

namespace bdim {

// A nonnegative strength per vertex. Support is the set of vertices with
// positive strength; cost is the total strength.
class Broadcast {
public:
    Broadcast() = default;
    explicit Broadcast(std::vector<int> values);

    static Broadcast indicator(int n, std::span<const Vertex> set);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(values_.size()); }
    [[nodiscard]] int operator[](Vertex v) const { return values_.at(v); }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
    [[nodiscard]] long long cost() const noexcept;
    [[nodiscard]] VertexSet support() const;
    [[nodiscard]] int max_value() const noexcept;

    friend bool operator==(const Broadcast&, const Broadcast&) = default;
    friend auto operator<=>(const Broadcast&, const Broadcast&) = default;

private:
    std::vector<int> values_;
};

struct CodeVector {
    std::vector<int> entries;

    friend bool operator==(const CodeVector&, const CodeVector&) = default;
    friend auto operator<=>(const CodeVector&, const CodeVector&) = default;
};

// Outcome of a resolution check. On failure `unresolved` names the
// lexicographically first pair (x,y), x < y, with equal codes.
struct Verdict {
    bool resolving = false;
    std::optional<Edge> unresolved;

    explicit operator bool() const noexcept { return resolving; }
};

// (d_{f(z)}(v,z)) for z over the sorted support of f.
CodeVector broadcast_code(const DistanceMatrix& d, const Broadcast& f, Vertex v);
// (d(v,z)) for z in S, untruncated; infinity stays the sentinel n.
CodeVector metric_code(const DistanceMatrix& d, std::span<const Vertex> landmarks, Vertex v);

Verdict is_resolving_broadcast(const Graph& g, const DistanceMatrix& d, const Broadcast& f);
Verdict is_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks);
Verdict is_adjacency_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks);
// Every landmark truncates at k.
Verdict is_distance_k_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks, int k);

// |supp f| + prod over supp of (f(v)+1) >= n; necessary for f to resolve a graph of order n.
bool counting_feasible(int n, const Broadcast& f);
inline bool counting_feasible(const Graph& g, const Broadcast& f) { return counting_feasible(g.order(), f); }

} // namespace bdim
