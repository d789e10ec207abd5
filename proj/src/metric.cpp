#include "bdim/metric.hpp"

#include <algorithm>
#include <queue>

namespace bdim {

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        d.set(s, s, 0);
        while (head < tail) {
            Vertex u = queue[head++];
            int du = d(s, u);
            for (Vertex w : g.neighbors(u))
                if (d(s, w) == n) {
                    d.set(s, w, du + 1);
                    queue[tail++] = w;
                }
        }
    }
    return d;
}

int truncated_distance(const DistanceMatrix& d, Vertex x, Vertex y, int k)
{
    if (k < 1)
        throw std::invalid_argument("truncation strength must be positive");
    return std::min(d(x, y), k + 1);
}

MetricProfile metric_profile(const Graph& g, const DistanceMatrix& d)
{
    const int n = g.order();
    MetricProfile p;
    p.eccentricity.assign(n, 0);
    p.component.assign(n, -1);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v)
            if (d.reachable(u, v))
                p.eccentricity[u] = std::max(p.eccentricity[u], d(u, v));
        p.finite_diameter = std::max(p.finite_diameter, p.eccentricity[u]);
        if (p.component[u] == -1) {
            for (Vertex v = u; v < n; ++v)
                if (d.reachable(u, v))
                    p.component[v] = p.component_count;
            ++p.component_count;
        }
    }
    p.connected = p.component_count <= 1;
    return p;
}

bool are_twins(const Graph& g, Vertex u, Vertex w)
{
    if (u == w)
        return false;
    auto nu = g.neighbors(u);
    auto nw = g.neighbors(w);
    auto i = nu.begin();
    auto j = nw.begin();
    for (;;) {
        while (i != nu.end() && *i == w)
            ++i;
        while (j != nw.end() && *j == u)
            ++j;
        if (i == nu.end() || j == nw.end())
            return i == nu.end() && j == nw.end();
        if (*i != *j)
            return false;
        ++i;
        ++j;
    }
}

TwinPartition twin_partition(const Graph& g)
{
    const int n = g.order();
    TwinPartition t;
    t.group_of.assign(n, -1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
            if (are_twins(g, u, w))
                t.pairs.emplace_back(u, w);

    for (Vertex u = 0; u < n; ++u) {
        if (t.group_of[u] != -1)
            continue;
        std::vector<Vertex> group{u};
        for (Vertex w = u + 1; w < n; ++w) {
            if (t.group_of[w] != -1)
                continue;
            bool all = std::all_of(group.begin(), group.end(), [&](Vertex x) { return are_twins(g, x, w); });
            if (all)
                group.push_back(w);
        }
        for (Vertex x : group)
            t.group_of[x] = static_cast<int>(t.groups.size());
        t.groups.push_back(std::move(group));
    }
    return t;
}

int delta_prime(const Graph& g, const DistanceMatrix& d)
{
    const int n = g.order();
    int best = 0;
    std::vector<int> histogram(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        std::fill(histogram.begin(), histogram.end(), 0);
        for (Vertex u = 0; u < n; ++u)
            if (u != v && d.reachable(u, v))
                best = std::max(best, ++histogram[d(u, v)]);
    }
    return best;
}

} // namespace bdim
