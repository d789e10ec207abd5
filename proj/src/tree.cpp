#include "bdim/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bdim {

TreeProfile tree_profile(const Graph& g)
{
    TreeProfile t;
    const int n = g.order();
    if (n == 0 || g.size() != static_cast<std::size_t>(n - 1) || !is_connected(g))
        return t;

    t.is_tree = true;
    t.order = n;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1)
            t.end_vertices.push_back(v);
        if (g.degree(v) >= 3)
            t.major_vertices.push_back(v);
    }
    t.sigma = static_cast<int>(t.end_vertices.size());
    if (t.major_vertices.empty())
        return t;

    // Walk inward from every leaf through degree-2 vertices; the first major
    // vertex reached is strictly closer than every other major vertex.
    std::map<Vertex, ExteriorMajor> by_major;
    for (Vertex leaf : t.end_vertices) {
        std::vector<Vertex> walk{leaf};
        Vertex prev = -1;
        Vertex cur = leaf;
        for (;;) {
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
            if (g.degree(cur) >= 3)
                break;
            walk.push_back(cur);
        }
        auto& em = by_major[cur];
        em.vertex = cur;
        em.terminals.push_back(leaf);
        std::reverse(walk.begin(), walk.end());
        em.legs.push_back(std::move(walk));
    }
    for (auto& [v, em] : by_major)
        t.exterior_majors.push_back(std::move(em));
    t.ex = static_cast<int>(t.exterior_majors.size());

    if (t.major_vertices.size() == 1) {
        const auto& em = t.exterior_majors.front();
        SpiderShape s;
        s.center = em.vertex;
        for (const auto& leg : em.legs)
            s.leg_lengths.push_back(static_cast<int>(leg.size()));
        std::sort(s.leg_lengths.begin(), s.leg_lengths.end(), std::greater<>());
        t.spider = std::move(s);
    }
    return t;
}

} // namespace bdim
