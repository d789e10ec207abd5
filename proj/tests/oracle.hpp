#pragma once

// Slow reference implementations used only by the tests. They read nothing
// from the library except Graph::order() and Graph::edges().

#include "bdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

constexpr int inf = 1 << 20;

using Matrix = std::vector<std::vector<int>>;

inline Matrix floyd_warshall(const bdim::Graph& g)
{
    const int n = g.order();
    Matrix d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j])
                    d[i][j] = d[i][m] + d[m][j];
    return d;
}

// Strength t means d_t = min(d, t+1); t = 0 means plain distance.
inline int entry(const Matrix& d, int x, int z, int t)
{
    return t == 0 ? d[x][z] : std::min(d[x][z], t + 1);
}

inline bool resolves(const Matrix& d, const std::vector<int>& strength)
{
    const int n = static_cast<int>(d.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool separated = false;
            for (int z = 0; z < n && !separated; ++z)
                if (strength[z] != -1 && entry(d, x, z, strength[z]) != entry(d, y, z, strength[z]))
                    separated = true;
            if (!separated)
                return false;
        }
    return true;
}

struct SetAnswer {
    int value = 0;
    std::vector<int> witness; // lexicographically least optimal set
};

// t = 0 for dim, 1 for adim, k for dim_k.
inline SetAnswer min_set(const bdim::Graph& g, int t)
{
    const int n = g.order();
    if (n == 1)
        return {1, {0}};
    const auto d = floyd_warshall(g);
    for (int size = 1; size <= n; ++size) {
        std::vector<std::vector<int>> found;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size)
                continue;
            std::vector<int> strength(n, -1), set;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    strength[v] = t;
                    set.push_back(v);
                }
            if (resolves(d, strength))
                found.push_back(set);
        }
        if (!found.empty())
            return {size, *std::min_element(found.begin(), found.end())};
    }
    return {n, {}};
}

struct BroadcastAnswer {
    int cost = 0;
    std::vector<std::vector<int>> minima; // sorted value vectors
};

// Every value vector in [0, s]^n of total s, for s = 1, 2, ... until one resolves.
inline BroadcastAnswer min_broadcasts(const bdim::Graph& g)
{
    const int n = g.order();
    const auto d = floyd_warshall(g);
    for (int s = 1;; ++s) {
        BroadcastAnswer out{s, {}};
        std::vector<int> f(n, 0);
        for (;;) {
            int total = 0;
            for (int x : f)
                total += x;
            if (total == s) {
                std::vector<int> strength(n, -1);
                for (int v = 0; v < n; ++v)
                    if (f[v] > 0)
                        strength[v] = f[v];
                if (resolves(d, strength))
                    out.minima.push_back(f);
            }
            int i = n - 1;
            while (i >= 0 && f[i] == s)
                f[i--] = 0;
            if (i < 0)
                break;
            ++f[i];
        }
        if (!out.minima.empty()) {
            std::sort(out.minima.begin(), out.minima.end());
            return out;
        }
    }
}

inline bool twins(const bdim::Graph& g, int u, int w)
{
    const int n = g.order();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : g.edges())
        adj[a][b] = adj[b][a] = true;
    for (int z = 0; z < n; ++z)
        if (z != u && z != w && adj[u][z] != adj[w][z])
            return false;
    return true;
}

inline std::vector<bdim::Graph> all_graphs(int max_order)
{
    std::vector<bdim::Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        std::vector<bdim::Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
            std::vector<bdim::Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(pairs[i]);
            out.push_back(bdim::build_graph(n, edges));
        }
    }
    return out;
}

inline bdim::Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<bdim::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return bdim::build_graph(n, edges);
}

} // namespace oracle
