#include "bdim/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bdim {

std::vector<std::pair<Vertex, std::string>> adim_labeling_certificate(const Graph& g, std::span<const Vertex> X)
{
    const int n = g.order();
    std::vector<bool> in_x(n, false);
    for (Vertex x : X) {
        if (x < 0 || x >= n)
            throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
        if (in_x[x])
            throw std::invalid_argument("duplicate vertex " + std::to_string(x) + " in X");
        in_x[x] = true;
    }
    const auto d = all_pairs_distances(g);
    if (auto verdict = is_adjacency_resolving_set(g, d, X); !verdict)
        throw std::invalid_argument("X is not an adjacency resolving set; vertices " +
                                    std::to_string(verdict.unresolved->first) + " and " +
                                    std::to_string(verdict.unresolved->second) + " share a code");

    std::vector<std::pair<Vertex, std::string>> labels;
    std::set<std::string> seen;
    for (Vertex v = 0; v < n; ++v) {
        if (in_x[v])
            continue;
        std::string label;
        for (Vertex x : X)
            label += g.adjacent(v, x) ? '1' : '0';
        if (!seen.insert(label).second)
            throw std::logic_error("label " + label + " repeats although X resolves the graph");
        labels.emplace_back(v, std::move(label));
    }
    return labels;
}

bool verify_zhang_structure(const Graph& t, std::span<const Vertex> W)
{
    const auto profile = tree_profile(t);
    if (!profile.is_tree)
        throw std::invalid_argument("verify_zhang_structure requires a tree");
    if (profile.ex < 1)
        throw std::invalid_argument("verify_zhang_structure requires a tree with an exterior major vertex");

    std::set<Vertex> w(W.begin(), W.end());
    if (w.size() != W.size())
        return false;
    std::size_t covered = 0;
    for (const auto& major : profile.exterior_majors) {
        int empty_legs = 0;
        for (const auto& leg : major.legs) {
            const auto hits = std::count_if(leg.begin(), leg.end(), [&](Vertex v) { return w.contains(v); });
            if (hits > 1)
                return false;
            if (hits == 0)
                ++empty_legs;
            covered += static_cast<std::size_t>(hits);
        }
        if (empty_legs != 1)
            return false;
    }
    // Anything in W off the legs is forbidden.
    return covered == w.size();
}

std::optional<SpiderBroadcast> spider_bdim(const TreeProfile& t)
{
    if (!t.is_tree)
        return std::nullopt;
    if (t.is_path()) {
        if (t.order != 2 && t.order != 3)
            return std::nullopt;
        Broadcast f = Broadcast::indicator(t.order, std::vector<Vertex>{t.end_vertices.front()});
        return SpiderBroadcast{1, std::move(f)};
    }
    if (!t.spider || t.exterior_majors.size() != 1)
        return std::nullopt;
    const auto& major = t.exterior_majors.front();
    const int x = major.terminal_degree();
    if (x < 3)
        return std::nullopt;
    std::optional<Vertex> short_leaf;
    for (const auto& leg : major.legs) {
        if (leg.size() > 2)
            return std::nullopt;
        if (leg.size() == 1 && (!short_leaf || leg.front() < *short_leaf))
            short_leaf = leg.front();
    }
    if (!short_leaf)
        return std::nullopt;
    std::vector<Vertex> support;
    for (const auto& leg : major.legs)
        if (leg.front() != *short_leaf)
            support.push_back(leg.front());
    std::sort(support.begin(), support.end());
    return SpiderBroadcast{x - 1, Broadcast::indicator(t.order, support)};
}

} // namespace bdim
