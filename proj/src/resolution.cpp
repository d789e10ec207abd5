#include "bdim/resolution.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bdim {

Broadcast::Broadcast(std::vector<int> values) : values_(std::move(values))
{
    for (std::size_t v = 0; v < values_.size(); ++v)
        if (values_[v] < 0)
            throw std::invalid_argument("broadcast value at vertex " + std::to_string(v) + " is negative");
}

Broadcast Broadcast::indicator(int n, std::span<const Vertex> set)
{
    std::vector<int> values(n, 0);
    for (Vertex v : set) {
        if (v < 0 || v >= n)
            throw std::out_of_range("indicator: vertex " + std::to_string(v) + " out of range");
        values[v] = 1;
    }
    return Broadcast(std::move(values));
}

long long Broadcast::cost() const noexcept
{
    long long total = 0;
    for (int x : values_)
        total += x;
    return total;
}

VertexSet Broadcast::support() const
{
    VertexSet s;
    for (Vertex v = 0; v < order(); ++v)
        if (values_[v] > 0)
            s.push_back(v);
    return s;
}

int Broadcast::max_value() const noexcept
{
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

namespace {

void check_order(const DistanceMatrix& d, const Broadcast& f)
{
    if (f.order() != d.order())
        throw std::invalid_argument("broadcast order does not match graph order");
}

void check_landmarks(const DistanceMatrix& d, std::span<const Vertex> landmarks)
{
    if (landmarks.empty())
        throw std::invalid_argument("landmark set is empty");
    for (Vertex z : landmarks)
        if (z < 0 || z >= d.order())
            throw std::out_of_range("landmark " + std::to_string(z) + " out of range");
}

// Landmarks with per-landmark truncation; strength 0 means no truncation.
Verdict resolve_codes(const DistanceMatrix& d, std::span<const Vertex> landmarks, std::span<const int> strength)
{
    const int n = d.order();
    std::map<std::vector<int>, Vertex> first_with_code;
    std::optional<Edge> best;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> code(landmarks.size());
        for (std::size_t i = 0; i < landmarks.size(); ++i) {
            int dist = d(v, landmarks[i]);
            code[i] = strength[i] > 0 ? std::min(dist, strength[i] + 1) : dist;
        }
        auto [it, inserted] = first_with_code.emplace(std::move(code), v);
        if (!inserted) {
            Edge pair{it->second, v};
            if (!best || pair < *best)
                best = pair;
        }
    }
    return Verdict{!best.has_value(), best};
}

} // namespace

CodeVector broadcast_code(const DistanceMatrix& d, const Broadcast& f, Vertex v)
{
    check_order(d, f);
    auto support = f.support();
    if (support.empty())
        throw std::invalid_argument("broadcast has empty support");
    CodeVector c;
    for (Vertex z : support)
        c.entries.push_back(std::min(d(v, z), f[z] + 1));
    return c;
}

CodeVector metric_code(const DistanceMatrix& d, std::span<const Vertex> landmarks, Vertex v)
{
    check_landmarks(d, landmarks);
    CodeVector c;
    for (Vertex z : landmarks)
        c.entries.push_back(d(v, z));
    return c;
}

Verdict is_resolving_broadcast(const Graph& g, const DistanceMatrix& d, const Broadcast& f)
{
    check_order(d, f);
    if (g.order() != d.order())
        throw std::invalid_argument("distance matrix does not match graph");
    auto support = f.support();
    if (support.empty())
        throw std::invalid_argument("broadcast has empty support");
    std::vector<int> strength;
    for (Vertex z : support)
        strength.push_back(f[z]);
    return resolve_codes(d, support, strength);
}

Verdict is_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks)
{
    if (g.order() != d.order())
        throw std::invalid_argument("distance matrix does not match graph");
    check_landmarks(d, landmarks);
    std::vector<int> strength(landmarks.size(), 0);
    return resolve_codes(d, landmarks, strength);
}

Verdict is_distance_k_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks, int k)
{
    if (k < 1)
        throw std::invalid_argument("truncation strength must be positive");
    if (g.order() != d.order())
        throw std::invalid_argument("distance matrix does not match graph");
    check_landmarks(d, landmarks);
    std::vector<int> strength(landmarks.size(), k);
    return resolve_codes(d, landmarks, strength);
}

Verdict is_adjacency_resolving_set(const Graph& g, const DistanceMatrix& d, std::span<const Vertex> landmarks)
{
    return is_distance_k_resolving_set(g, d, landmarks, 1);
}

bool counting_feasible(int n, const Broadcast& f)
{
    long long total = 0;
    long long product = 1;
    for (int x : f.values())
        if (x > 0) {
            ++total;
            product = std::min<long long>(product * (x + 1LL), n + 1LL);
        }
    return total + product >= n;
}

} // namespace bdim
