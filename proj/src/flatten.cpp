#include "bdim/solvers.hpp"

#include <algorithm>
#include <map>

namespace bdim {

namespace {

enum class Shape { path, cycle };

Shape canonical_shape(const Graph& g)
{
    const int n = g.order();
    if (n < 4)
        throw std::invalid_argument("flatten requires a path or cycle of order at least 4");
    for (Vertex v = 0; v + 1 < n; ++v)
        if (!g.adjacent(v, v + 1))
            throw std::invalid_argument("flatten requires vertices 0..n-1 in path/cycle order");
    if (g.size() == static_cast<std::size_t>(n - 1))
        return Shape::path;
    if (g.size() == static_cast<std::size_t>(n) && g.adjacent(0, n - 1))
        return Shape::cycle;
    throw std::invalid_argument("flatten requires a path or cycle");
}

} // namespace

Broadcast flatten_path_cycle_broadcast(const Graph& g, const Broadcast& f)
{
    const Shape shape = canonical_shape(g);
    const int n = g.order();
    if (f.order() != n)
        throw std::invalid_argument("broadcast order does not match graph order");
    const auto d = all_pairs_distances(g);
    if (f.support().empty() || !is_resolving_broadcast(g, d, f))
        throw std::invalid_argument("flatten requires a resolving broadcast");

    std::vector<int> values = f.values();
    auto wrap = [n](int j) { return ((j % n) + n) % n; };
    for (;;) {
        auto it = std::find_if(values.begin(), values.end(), [](int x) { return x > 1; });
        if (it == values.end())
            break;
        const int j = static_cast<int>(it - values.begin());
        const int x = *it;

        // Values assigned this step; a vertex assigned several keeps the largest.
        std::map<int, int> assigned;
        auto assign = [&](int v, int value) {
            auto [slot, inserted] = assigned.try_emplace(v, value);
            if (!inserted)
                slot->second = std::max(slot->second, value);
        };
        if (x == 2) {
            if (shape == Shape::path && j == 0) {
                assign(0, 1);
                assign(1, 1);
            } else if (shape == Shape::path && j == n - 1) {
                assign(n - 1, 1);
                assign(n - 2, 1);
            } else {
                assign(j, 0);
                assign(wrap(j - 1), 1);
                assign(wrap(j + 1), 1);
            }
        } else {
            assign(j, x - 2);
            for (int target : {j - x + 1, j + x - 1}) {
                if (shape == Shape::cycle)
                    assign(wrap(target), 1);
                else if (target >= 0 && target < n)
                    assign(target, 1);
            }
        }
        for (auto [v, value] : assigned)
            values[v] = v == j ? value : std::max(values[v], value);
    }
    return Broadcast(std::move(values));
}

} // namespace bdim
