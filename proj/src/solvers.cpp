#include "bdim/solvers.hpp"

#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace bdim {

std::string_view to_string(Parameter p)
{
    switch (p) {
    case Parameter::dim: return "dim";
    case Parameter::adim: return "adim";
    case Parameter::dim_k: return "dimk";
    case Parameter::bdim: return "bdim";
    }
    return "dim";
}

Parameter parse_parameter(std::string_view name)
{
    if (name == "dim")
        return Parameter::dim;
    if (name == "adim")
        return Parameter::adim;
    if (name == "dimk" || name == "dim_k")
        return Parameter::dim_k;
    if (name == "bdim")
        return Parameter::bdim;
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

std::vector<int> strength_caps(const DistanceMatrix& d)
{
    const int n = d.order();
    std::vector<int> caps(n, 1);
    for (Vertex v = 0; v < n; ++v) {
        int ecc = 0;
        bool reaches_all = true;
        for (Vertex u = 0; u < n; ++u) {
            if (d.reachable(u, v))
                ecc = std::max(ecc, d(u, v));
            else
                reaches_all = false;
        }
        caps[v] = std::max(1, reaches_all ? ecc - 1 : ecc);
    }
    return caps;
}

namespace {

long long saturating_power(long long base, int exp, long long limit)
{
    long long r = 1;
    for (int i = 0; i < exp && r <= limit; ++i)
        r *= base;
    return r;
}

} // namespace

int counting_lower_bound(int n)
{
    if (n <= 1)
        return 0;
    // For y support vertices and total s, prod(f+1) peaks at the most even split.
    for (int s = 1;; ++s)
        for (int y = 1; y <= s; ++y) {
            long long product = saturating_power(s / y + 2, s % y, n);
            if (product <= n)
                product *= saturating_power(s / y + 1, y - s % y, n);
            if (y + product >= n)
                return s;
        }
}

namespace {

using detail::Partition;
using detail::Refiner;

int twin_lower_bound(const TwinPartition& twins)
{
    int total = 0;
    for (const auto& group : twins.groups)
        total += static_cast<int>(group.size()) - 1;
    return total;
}

void check_order(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("solvers require a graph with at least one vertex");
}

// Lexicographic search over landmark sets of one fixed size. The first set
// found is the lexicographically least resolving set of that size.
class SubsetSearch {
public:
    SubsetSearch(const DistanceMatrix& d, const TwinPartition& twins, const std::vector<std::vector<int>>& rows,
                 int max_parts, int target)
        : n_(d.order()), twins_(twins), rows_(rows), max_parts_(max_parts), target_(target), refiner_(n_),
          parts_(target + 1, Partition(n_)), excluded_(twins.groups.size(), 0), chosen_in_(twins.groups.size(), 0)
    {
        needed_ = twin_lower_bound(twins);
    }

    // Explores only sets whose smallest element is `first`.
    bool run(int first)
    {
        first_ = first;
        return dfs(0, 0);
    }

    [[nodiscard]] const VertexSet& chosen() const { return chosen_; }
    [[nodiscard]] long long examined() const { return examined_; }

private:
    bool dfs(int depth, int start)
    {
        ++examined_;
        const Partition& p = parts_[depth];
        if (depth == target_)
            return p.discrete();
        const int remaining = target_ - depth;
        if (needed_ > remaining)
            return false;
        if (saturating_power(max_parts_, remaining, n_) < p.largest)
            return false;

        std::vector<int> touched;
        bool found = false;
        for (int c = start; c <= n_ - remaining; ++c) {
            if (depth > 0 || c == first_) {
                const int g = twins_.group_of[c];
                const bool counts = chosen_in_[g] < static_cast<int>(twins_.groups[g].size()) - 1;
                chosen_.push_back(c);
                ++chosen_in_[g];
                if (counts)
                    --needed_;
                refiner_.refine(p, rows_[c], parts_[depth + 1]);
                if (dfs(depth + 1, c + 1)) {
                    found = true;
                    break;
                }
                chosen_.pop_back();
                --chosen_in_[g];
                if (counts)
                    ++needed_;
            }
            if (depth == 0 && c >= first_)
                break;
            const int g = twins_.group_of[c];
            touched.push_back(g);
            if (++excluded_[g] > 1)
                break;
        }
        if (!found)
            for (int g : touched)
                --excluded_[g];
        return found;
    }

    int n_;
    const TwinPartition& twins_;
    const std::vector<std::vector<int>>& rows_;
    int max_parts_;
    int target_;
    int first_ = 0;
    Refiner refiner_;
    std::vector<Partition> parts_;
    std::vector<int> excluded_;
    std::vector<int> chosen_in_;
    int needed_ = 0;
    VertexSet chosen_;
    long long examined_ = 0;
};

SolverResult solve_subset(const Graph& g, Parameter parameter, int truncation, const SolverOptions& options)
{
    check_order(g);
    SolverResult result;
    result.parameter = parameter;
    result.k = parameter == Parameter::dim_k ? truncation : 0;
    const int n = g.order();
    if (n == 1) {
        result.value = 1;
        result.witness = VertexSet{0};
        result.lower_bound_used = 1;
        return result;
    }

    const auto d = all_pairs_distances(g);
    const auto twins = twin_partition(g);
    std::vector<std::vector<int>> rows(n);
    int max_parts = 1;
    for (Vertex z = 0; z < n; ++z) {
        rows[z] = detail::landmark_row(d, z, truncation);
        max_parts = std::max(max_parts, detail::distinct_values(rows[z]));
    }

    result.lower_bound_used = std::max(1, twin_lower_bound(twins));
    for (int size = result.lower_bound_used; size <= n; ++size) {
        const auto tasks = static_cast<std::size_t>(n - size + 1);
        std::vector<long long> examined(tasks, 0);
        auto found = detail::first_success<VertexSet>(tasks, options.threads, [&](std::size_t first) -> std::optional<VertexSet> {
            SubsetSearch search(d, twins, rows, max_parts, size);
            bool ok = search.run(static_cast<int>(first));
            examined[first] = search.examined();
            if (ok)
                return search.chosen();
            return std::nullopt;
        });
        result.candidates_examined += detail::examined_through(examined, found ? found->first : tasks);
        if (found) {
            result.value = size;
            result.witness = std::move(found->second);
            break;
        }
    }
    return result;
}

// Lexicographic search over broadcasts of one fixed cost with per-vertex caps.
// Vertices are assigned in id order, smaller strengths first, so the first
// broadcast found is the lexicographically least of that cost.
class BroadcastSearch {
public:
    BroadcastSearch(int n, const TwinPartition& twins, const std::vector<int>& caps,
                    const std::vector<std::vector<std::vector<int>>>& rows, const std::vector<long long>& split_bound,
                    int cost)
        : n_(n), twins_(twins), caps_(caps), rows_(rows), split_bound_(split_bound), cost_(cost), refiner_(n),
          parts_(n + 1, Partition(n)), values_(n, 0), zeros_(twins.groups.size(), 0), suffix_cap_(n + 1, 0)
    {
        for (int i = n - 1; i >= 0; --i)
            suffix_cap_[i] = suffix_cap_[i + 1] + caps[i];
    }

    bool run(const std::vector<int>& prefix)
    {
        prefix_ = &prefix;
        return dfs(0, cost_, 0, 1);
    }

    [[nodiscard]] Broadcast witness() const { return Broadcast(values_); }
    [[nodiscard]] long long examined() const { return examined_; }

private:
    bool dfs(int i, int budget, int support, long long product)
    {
        ++examined_;
        const Partition& p = parts_[i];
        if (budget == 0) {
            if (!p.discrete())
                return false;
            std::fill(values_.begin() + i, values_.end(), 0);
            return true;
        }
        if (i == n_ || suffix_cap_[i] < budget)
            return false;
        if (split_bound_[budget] < p.largest)
            return false;
        // Each remaining unit adds at most one support vertex and at most doubles the product.
        if (support + budget + std::min<long long>(product * saturating_power(2, budget, n_), n_) < n_)
            return false;

        int lo = 0;
        int hi = std::min(caps_[i], budget);
        if (i < static_cast<int>(prefix_->size()))
            lo = hi = (*prefix_)[i];
        const int g = twins_.group_of[i];
        for (int x = lo; x <= hi; ++x) {
            bool ok;
            if (x == 0) {
                if (zeros_[g] >= 1)
                    continue;
                ++zeros_[g];
                values_[i] = 0;
                parts_[i + 1] = p;
                ok = dfs(i + 1, budget, support, product);
                --zeros_[g];
            } else {
                values_[i] = x;
                refiner_.refine(p, rows_[i][x], parts_[i + 1]);
                ok = dfs(i + 1, budget - x, support + 1, std::min<long long>(product * (x + 1), n_ + 1));
            }
            if (ok)
                return true;
        }
        values_[i] = 0;
        return false;
    }

    int n_;
    const TwinPartition& twins_;
    const std::vector<int>& caps_;
    const std::vector<std::vector<std::vector<int>>>& rows_;
    const std::vector<long long>& split_bound_;
    int cost_;
    Refiner refiner_;
    std::vector<Partition> parts_;
    std::vector<int> values_;
    std::vector<int> zeros_;
    std::vector<int> suffix_cap_;
    const std::vector<int>* prefix_ = nullptr;
    long long examined_ = 0;
};

// Strength prefixes for the first `depth` vertices in lexicographic order.
void collect_prefixes(int depth, int cost, const std::vector<int>& caps, const TwinPartition& twins,
                      std::vector<int>& current, std::vector<int>& zeros, std::vector<std::vector<int>>& out)
{
    const int i = static_cast<int>(current.size());
    if (i == depth) {
        out.push_back(current);
        return;
    }
    const int g = twins.group_of[i];
    for (int x = 0; x <= std::min(caps[i], cost); ++x) {
        if (x == 0 && zeros[g] >= 1)
            continue;
        if (x == 0)
            ++zeros[g];
        current.push_back(x);
        collect_prefixes(depth, cost - x, caps, twins, current, zeros, out);
        current.pop_back();
        if (x == 0)
            --zeros[g];
    }
}

} // namespace

SolverResult solve_dim(const Graph& g, const SolverOptions& options)
{
    return solve_subset(g, Parameter::dim, 0, options);
}

SolverResult solve_adim(const Graph& g, const SolverOptions& options)
{
    return solve_subset(g, Parameter::adim, 1, options);
}

SolverResult solve_dim_k(const Graph& g, int k, const SolverOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("dim_k requires k >= 1");
    return solve_subset(g, Parameter::dim_k, k, options);
}

SolverResult solve_bdim(const Graph& g, const SolverOptions& options)
{
    check_order(g);
    SolverResult result;
    result.parameter = Parameter::bdim;
    const int n = g.order();
    if (n == 1) {
        result.value = 1;
        result.witness = Broadcast({1});
        result.lower_bound_used = 1;
        return result;
    }

    const auto d = all_pairs_distances(g);
    const auto profile = metric_profile(g, d);
    const auto twins = twin_partition(g);
    const auto caps = strength_caps(d);

    // rows[z][t] for 1 <= t <= caps[z]; best_parts[t] bounds how many parts a
    // single landmark of strength t can cut one class into.
    const int max_cap = *std::max_element(caps.begin(), caps.end());
    std::vector<std::vector<std::vector<int>>> rows(n);
    std::vector<long long> best_parts(max_cap + 1, 1);
    for (Vertex z = 0; z < n; ++z) {
        rows[z].resize(caps[z] + 1);
        for (int t = 1; t <= caps[z]; ++t)
            rows[z][t] = detail::landmark_row(d, z, t);
        for (int t = 1; t <= max_cap; ++t)
            best_parts[t] =
                std::max<long long>(best_parts[t], detail::distinct_values(rows[z][std::min(t, caps[z])]));
    }

    int lower = std::max({1, (profile.finite_diameter + 2) / 3, counting_lower_bound(n), twin_lower_bound(twins)});
    result.lower_bound_used = lower;

    for (int cost = lower;; ++cost) {
        std::vector<long long> split_bound(cost + 1, 1);
        for (int r = 1; r <= cost; ++r) {
            split_bound[r] = split_bound[r - 1];
            for (int t = 1; t <= std::min(r, max_cap); ++t)
                split_bound[r] = std::max(split_bound[r], std::min<long long>(best_parts[t] * split_bound[r - t], n + 1));
        }

        // The split does not depend on the thread count, so neither does the
        // candidate count.
        std::vector<std::vector<int>> prefixes;
        for (int depth = 1; depth <= n; ++depth) {
            prefixes.clear();
            std::vector<int> current;
            std::vector<int> zeros(twins.groups.size(), 0);
            collect_prefixes(depth, cost, caps, twins, current, zeros, prefixes);
            if (prefixes.size() >= 32)
                break;
        }

        std::vector<long long> examined(prefixes.size(), 0);
        auto found = detail::first_success<Broadcast>(
            prefixes.size(), options.threads, [&](std::size_t index) -> std::optional<Broadcast> {
                BroadcastSearch search(n, twins, caps, rows, split_bound, cost);
                bool ok = search.run(prefixes[index]);
                examined[index] = search.examined();
                if (ok)
                    return search.witness();
                return std::nullopt;
            });
        result.candidates_examined += detail::examined_through(examined, found ? found->first : prefixes.size());
        if (found) {
            result.value = cost;
            result.witness = std::move(found->second);
            break;
        }
        if (cost > n)
            throw std::logic_error("bdim search exceeded the order of the graph");
    }
    return result;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) + " not in graph");
    VertexDeletion out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v)
            out.old_id.push_back(u);
    out.graph = induced_subgraph(g, out.old_id);
    return out;
}

Graph delete_edge(const Graph& g, Edge e)
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("delete_edge: edge (" + std::to_string(u) + ", " + std::to_string(v)
                                    + ") not in graph");
    std::vector<Edge> edges;
    for (auto edge : g.edges())
        if (edge != Edge{std::min(u, v), std::max(u, v)})
            edges.push_back(edge);
    return build_graph(g.order(), edges);
}

} // namespace bdim
