#include "bdim/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace bdim::cli {

namespace {

struct Instance {
    Graph graph;
    std::uint64_t seed = 0; // 0 for exhaustively enumerated graphs
};

struct Values {
    SolverResult dim, adim, bdim;
    [[nodiscard]] ComputedValues computed() const { return {dim.value, adim.value, bdim.value}; }
};

Values solve_all(const Graph& g, int threads)
{
    SolverOptions o{threads};
    return {solve_dim(g, o), solve_adim(g, o), solve_bdim(g, o)};
}

class Checker {
public:
    Checker(std::string suite, const VerifyOptions& options) : options_(options) { result_.suite = std::move(suite); }

    void expect(bool ok, const std::string& check, const std::string& message, const Graph& g, std::uint64_t seed = 0)
    {
        ++result_.checks;
        if (!ok)
            result_.failures.push_back({check, message, write_edge_list(g), seed});
    }

    [[nodiscard]] const VerifyOptions& options() const { return options_; }
    SuiteResult take() { return std::move(result_); }

private:
    const VerifyOptions& options_;
    SuiteResult result_;
};

std::string show(const std::string& what, long long a, const std::string& op, long long b)
{
    return what + ": " + std::to_string(a) + " " + op + " " + std::to_string(b);
}

// Every labeled graph up to max_order, then seeded G(n, 1/2) samples at the
// two orders just above it.
std::vector<Instance> corpus(const VerifyOptions& o)
{
    if (o.max_order < 1 || o.max_order > 6)
        throw std::invalid_argument("--max-order must lie in [1, 6] for exhaustive suites");
    std::vector<Instance> out;
    for (int n = 1; n <= o.max_order; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
            out.push_back({labeled_graph(n, mask), 0});
    for (int n = o.max_order + 1; n <= o.max_order + 2; ++n)
        for (int i = 0; i < o.samples; ++i) {
            const std::uint64_t seed = o.seed * 1'000'003ULL + static_cast<std::uint64_t>(n) * 10'007ULL + i;
            FamilySpec spec(Family::random_graph, {{"n", std::to_string(n)}, {"p", "0.5"}, {"seed", std::to_string(seed)}});
            out.push_back({generate(spec), seed});
        }
    return out;
}

Graph connected_random_graph(int n, std::uint64_t& seed)
{
    for (;; ++seed) {
        FamilySpec spec(Family::random_graph, {{"n", std::to_string(n)}, {"p", "0.5"}, {"seed", std::to_string(seed)}});
        Graph g = generate(spec);
        if (is_connected(g))
            return g;
    }
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b)
{
    std::map<int, int> forward, backward;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [f, fi] = forward.try_emplace(a[i], b[i]);
        auto [r, ri] = backward.try_emplace(b[i], a[i]);
        if (f->second != b[i] || r->second != a[i])
            return false;
    }
    return true;
}

std::vector<int> truncated_row(const DistanceMatrix& d, Vertex z, int t)
{
    std::vector<int> row(d.order());
    for (Vertex v = 0; v < d.order(); ++v)
        row[v] = truncated_distance(d, v, z, t);
    return row;
}

bool contains(const VertexSet& s, Vertex v)
{
    return std::find(s.begin(), s.end(), v) != s.end();
}

// Minimum resolving broadcasts by checking every value vector in [0, cost]^n
// with the right total; shares nothing with the composition scan.
std::vector<Broadcast> brute_force_minima(const Graph& g, int cost)
{
    const int n = g.order();
    const auto d = all_pairs_distances(g);
    std::vector<Broadcast> out;
    std::vector<int> values(n, 0);
    for (;;) {
        int total = 0;
        for (int x : values)
            total += x;
        if (total == cost) {
            Broadcast f(values);
            if (is_resolving_broadcast(g, d, f))
                out.push_back(std::move(f));
        }
        int i = n - 1;
        while (i >= 0 && values[i] == cost)
            values[i--] = 0;
        if (i < 0)
            break;
        ++values[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

void suite_chain(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto v = solve_all(g, c.options().threads);
        const int n = g.order();
        if (n == 1) {
            c.expect(v.dim.value == 1 && v.adim.value == 1 && v.bdim.value == 1, "order-one", "all values 1", g, seed);
            continue;
        }
        c.expect(1 <= v.dim.value, "dim-positive", show("dim", v.dim.value, ">=", 1), g, seed);
        c.expect(v.dim.value <= v.bdim.value, "dim-le-bdim", show("dim vs bdim", v.dim.value, "<=", v.bdim.value), g, seed);
        c.expect(v.bdim.value <= v.adim.value, "bdim-le-adim", show("bdim vs adim", v.bdim.value, "<=", v.adim.value), g,
                 seed);
        c.expect(v.adim.value <= n - 1, "adim-le-n-1", show("adim vs n-1", v.adim.value, "<=", n - 1), g, seed);
    }
}

void suite_diameter(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        if (g.order() < 2 || !is_connected(g))
            continue;
        const auto d = all_pairs_distances(g);
        const int diam = metric_profile(g, d).finite_diameter;
        const auto v = solve_all(g, c.options().threads);
        if (diam <= 2)
            c.expect(v.dim.value == v.bdim.value && v.bdim.value == v.adim.value, "small-diameter-equality",
                     "dim=" + std::to_string(v.dim.value) + " bdim=" + std::to_string(v.bdim.value)
                         + " adim=" + std::to_string(v.adim.value),
                     g, seed);
        if (diam >= 2) {
            c.expect(3 * v.bdim.value >= diam, "diameter-third", show("3*bdim vs d", 3LL * v.bdim.value, ">=", diam), g,
                     seed);
            c.expect(v.bdim.value <= v.dim.value * (diam - 1), "diameter-dim-product",
                     show("bdim vs dim*(d-1)", v.bdim.value, "<=", static_cast<long long>(v.dim.value) * (diam - 1)), g,
                     seed);
        }
    }
}

void suite_complement(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const int a = solve_adim(g, {c.options().threads}).value;
        const int b = solve_adim(complement(g), {c.options().threads}).value;
        c.expect(a == b, "adim-complement", show("adim(G) vs adim(complement)", a, "==", b), g, seed);
    }
}

void suite_delta_prime(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto v = solve_all(g, c.options().threads);
        const int dp = delta_prime(g, all_pairs_distances(g));
        c.expect(v.adim.value <= static_cast<long long>(dp + 1) * v.bdim.value, "adim-delta-prime",
                 show("adim vs (dp+1)*bdim", v.adim.value, "<=", static_cast<long long>(dp + 1) * v.bdim.value), g, seed);
    }
}

void suite_bounds(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto report = bound_report(g, solve_all(g, c.options().threads).computed());
        for (const auto& r : report.records)
            c.expect(r.status != BoundStatus::violated, r.id, show(r.id, r.lhs, "<=", r.rhs), g, seed);
    }
}

void suite_characterize(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        for (const auto& ch : characterize_small(g, solve_all(g, c.options().threads).computed()))
            c.expect(ch.agrees(), ch.id,
                     std::string("value says ") + (ch.by_value ? "yes" : "no") + ", structure says "
                         + (ch.by_structure ? "yes" : "no"),
                     g, seed);
    }
}

void suite_counting(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto r = solve_bdim(g, {c.options().threads});
        const int lb = counting_lower_bound(g.order());
        c.expect(lb <= r.value, "counting-lower-bound", show("counting bound vs bdim", lb, "<=", r.value), g, seed);
        c.expect(counting_feasible(g, std::get<Broadcast>(r.witness)), "witness-counting",
                 "optimal broadcast violates |supp| + prod(f+1) >= n", g, seed);
    }
}

void suite_twins(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto tp = twin_partition(g);
        if (tp.pairs.empty())
            continue;
        const auto v = solve_all(g, c.options().threads);
        const auto& ds = std::get<VertexSet>(v.dim.witness);
        const auto& as = std::get<VertexSet>(v.adim.witness);
        const auto& f = std::get<Broadcast>(v.bdim.witness);
        for (auto [u, w] : tp.pairs) {
            const std::string pair = "(" + std::to_string(u) + "," + std::to_string(w) + ")";
            c.expect(contains(ds, u) || contains(ds, w), "twin-in-resolving-set", "dim witness misses twins " + pair, g,
                     seed);
            c.expect(contains(as, u) || contains(as, w), "twin-in-adjacency-set", "adim witness misses twins " + pair,
                     g, seed);
            c.expect(f[u] > 0 || f[w] > 0, "twin-in-support", "bdim witness misses twins " + pair, g, seed);
        }
    }
}

void suite_cap_safety(Checker& c)
{
    for (const auto& [g, seed] : corpus(c.options())) {
        const auto d = all_pairs_distances(g);
        const auto caps = strength_caps(d);
        const bool connected = is_connected(g);
        for (Vertex z = 0; z < g.order(); ++z) {
            const auto capped = truncated_row(d, z, caps[z]);
            for (int t = caps[z] + 1; t <= g.order() + 1; ++t) {
                const auto row = truncated_row(d, z, t);
                const std::string where = "vertex " + std::to_string(z) + " strength " + std::to_string(t);
                c.expect(same_partition(capped, row), "cap-partition", where, g, seed);
                if (connected)
                    c.expect(capped == row, "cap-codes", where, g, seed);
            }
        }
    }
}

void suite_formulas(Checker& c)
{
    std::vector<FamilySpec> specs;
    auto add = [&specs](Family f, std::map<std::string, std::string> p) { specs.emplace_back(f, std::move(p)); };
    for (int n = 1; n <= 12; ++n)
        add(Family::path, {{"n", std::to_string(n)}});
    for (int n = 3; n <= 12; ++n)
        add(Family::cycle, {{"n", std::to_string(n)}});
    for (int n = 3; n <= 9; ++n)
        add(Family::wheel, {{"n", std::to_string(n)}});
    for (int n = 1; n <= 9; ++n)
        add(Family::fan, {{"n", std::to_string(n)}});
    for (int n = 1; n <= 6; ++n) {
        add(Family::complete, {{"n", std::to_string(n)}});
        add(Family::empty, {{"n", std::to_string(n)}});
    }
    for (int x = 1; x <= 6; ++x)
        add(Family::star, {{"x", std::to_string(x)}});
    for (int x = 1; x <= 5; ++x)
        for (int s = 0; s <= x; ++s)
            add(Family::spider, {{"x", std::to_string(x)}, {"s", std::to_string(s)}});
    add(Family::petersen, {});
    for (const char* dims : {"2,2", "2,3", "3,3", "2,4", "3,4", "4,4", "1,5", "1,1"})
        add(Family::grid, {{"dims", dims}});
    for (int k = 1; k <= 3; ++k)
        add(Family::logn_sharp, {{"k", std::to_string(k)}});
    std::mt19937_64 rng(c.options().seed);
    for (int i = 0; i < 20; ++i) {
        std::string parts;
        int total = 0;
        const int k = 2 + static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j) {
            const int a = 1 + static_cast<int>(rng() % 3);
            total += a;
            parts += (j ? "," : "") + std::to_string(a);
        }
        if (total <= 10)
            add(Family::complete_multipartite, {{"parts", parts}});
    }
    for (int i = 0; i < 20; ++i)
        add(Family::random_tree, {{"n", std::to_string(2 + i % 9)}, {"seed", std::to_string(c.options().seed + i)}});

    for (const auto& spec : specs) {
        const Graph g = generate(spec);
        for (Parameter p : {Parameter::dim, Parameter::adim, Parameter::bdim}) {
            const auto f = closed_form({p, spec});
            if (!f)
                continue;
            SolverResult r = p == Parameter::dim    ? solve_dim(g, {c.options().threads})
                             : p == Parameter::adim ? solve_adim(g, {c.options().threads})
                                                    : solve_bdim(g, {c.options().threads});
            c.expect(r.value == *f.value, spec.describe() + " " + std::string(to_string(p)),
                     show("solver vs formula", r.value, "==", *f.value), g);
        }
    }
}

void suite_sharp(Checker& c)
{
    for (int k = 1; k <= 3; ++k) {
        const Graph g = generate(FamilySpec(Family::logn_sharp, {{"k", std::to_string(k)}}));
        const std::string tag = "k=" + std::to_string(k);
        c.expect(g.order() == k + (1 << k), "order", tag + " order " + std::to_string(g.order()), g);
        const int a = solve_adim(g, {c.options().threads}).value;
        const int b = solve_bdim(g, {c.options().threads}).value;
        c.expect(a == k && b == k, "adim-bdim", tag + " adim=" + std::to_string(a) + " bdim=" + std::to_string(b), g);
        c.expect(clique_number(g) == (1 << k), "clique", tag + " clique " + std::to_string(clique_number(g)), g);
        c.expect(max_degree(g) == k + (1 << k) - 1, "max-degree", tag + " max degree " + std::to_string(max_degree(g)),
                 g);
    }
    const int samples = std::max(c.options().samples, 20);
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < samples; ++i) {
            const std::uint64_t seed = c.options().seed * 7919 + static_cast<std::uint64_t>(k) * 104729 + i;
            const Graph g = sample_Hk(k, seed);
            const auto r = solve_adim(g, {c.options().threads});
            c.expect(r.value <= k, "hk-membership", show("adim of H_k sample", r.value, "<=", k), g, seed);
            c.expect(g.order() <= r.value + (1 << r.value), "hk-order",
                     show("order vs adim+2^adim", g.order(), "<=", r.value + (1 << r.value)), g, seed);
            bool distinct = true;
            try {
                (void)adim_labeling_certificate(g, std::get<VertexSet>(r.witness));
            } catch (const std::exception&) {
                distinct = false;
            }
            c.expect(distinct, "labels-distinct", "labeling certificate failed on an optimal adjacency set", g, seed);
        }
}

void suite_grid(Checker& c)
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            const Graph g = generate(FamilySpec(Family::grid, {{"dims", std::to_string(m) + "," + std::to_string(n)}}));
            const int v = solve_dim(g, {c.options().threads}).value;
            c.expect(v == 2, "grid-dim", show("dim of grid", v, "==", 2), g);
        }
    for (int k = 2; k <= 4; ++k) {
        const Graph g = generate(FamilySpec(Family::grid, {{"dims", std::to_string(k) + "," + std::to_string(k)}}));
        const int d = 2 * k - 2;
        const int b = solve_bdim(g, {c.options().threads}).value;
        c.expect(3 * b >= d && b <= 2 * (d - 1), "grid-bdim-range",
                 "bdim " + std::to_string(b) + " outside [ceil(d/3), 2(d-1)] for d=" + std::to_string(d), g);
    }
}

// Every minimum resolving set of t, found by scanning all subsets of size dim.
std::vector<VertexSet> all_minimum_resolving_sets(const Graph& t, int dim)
{
    const int n = t.order();
    const auto d = all_pairs_distances(t);
    std::vector<VertexSet> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + dim, true);
    do {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                s.push_back(v);
        if (is_resolving_set(t, d, s))
            out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

void check_tree(Checker& c, const Graph& t, std::uint64_t seed)
{
    const auto profile = tree_profile(t);
    const auto dim = solve_dim(t, {c.options().threads});
    const auto bdim = solve_bdim(t, {c.options().threads});
    if (!profile.is_path()) {
        c.expect(dim.value == profile.sigma - profile.ex, "tree-dim",
                 show("dim vs sigma-ex", dim.value, "==", profile.sigma - profile.ex), t, seed);
        // Both directions: the structural description picks out exactly the minimum resolving sets.
        const auto sets = all_minimum_resolving_sets(t, dim.value);
        for (const auto& s : sets)
            c.expect(verify_zhang_structure(t, s), "zhang-structure", "a minimum resolving set fails the description",
                     t, seed);
        std::vector<bool> pick(t.order(), false);
        long long described = 0;
        std::fill(pick.begin(), pick.begin() + dim.value, true);
        do {
            VertexSet s;
            for (Vertex v = 0; v < t.order(); ++v)
                if (pick[v])
                    s.push_back(v);
            described += verify_zhang_structure(t, s) ? 1 : 0;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        c.expect(described == static_cast<long long>(sets.size()), "zhang-count",
                 show("described sets vs minimum sets", described, "==", static_cast<long long>(sets.size())), t, seed);
    }
    const bool qualifies = spider_bdim(profile).has_value();
    c.expect((bdim.value == dim.value) == qualifies, "tree-bdim-equals-dim",
             "bdim=" + std::to_string(bdim.value) + " dim=" + std::to_string(dim.value) + " qualifying="
                 + (qualifies ? "yes" : "no"),
             t, seed);
    if (auto s = spider_bdim(profile)) {
        const auto d = all_pairs_distances(t);
        c.expect(s->witness.cost() == s->value && is_resolving_broadcast(t, d, s->witness), "spider-witness",
                 "proof witness does not resolve", t, seed);
    }
}

void suite_trees(Checker& c)
{
    for (int x = 3; x <= 5; ++x)
        for (int s = 0; s <= x; ++s) {
            const Graph t = generate(FamilySpec(Family::spider, {{"x", std::to_string(x)}, {"s", std::to_string(s)}}));
            const int dim = solve_dim(t, {c.options().threads}).value;
            const int bdim = solve_bdim(t, {c.options().threads}).value;
            const std::string tag = "x=" + std::to_string(x) + " s=" + std::to_string(s);
            c.expect(dim == x - 1, "spider-dim", tag + show(" dim", dim, "==", x - 1), t);
            c.expect((bdim == dim) == (s <= x - 1), "spider-bdim", tag + " bdim=" + std::to_string(bdim), t);
            check_tree(c, t, 0);
        }
    const int samples = std::max(c.options().samples, 50);
    std::mt19937_64 rng(c.options().seed);
    for (int i = 0; i < samples; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const std::uint64_t seed = rng();
        const Graph t = generate(FamilySpec(Family::random_tree, {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}}));
        check_tree(c, t, seed);
    }
}

void suite_deletion(Checker& c)
{
    const int samples = std::max(c.options().samples, 100);
    std::uint64_t seed = c.options().seed;
    const int threads = c.options().threads;
    for (int i = 0; i < samples; ++i, ++seed) {
        const int n = 3 + i % 6;
        const Graph g = connected_random_graph(n, seed);
        const int adim = solve_adim(g, {threads}).value;
        const int dim = solve_dim(g, {threads}).value;
        for (Vertex v = 0; v < n; ++v) {
            const auto del = delete_vertex(g, v);
            if (!is_connected(del.graph))
                continue;
            const int after = solve_adim(del.graph, {threads}).value;
            c.expect(adim <= after + 1, "adim-vertex-deletion",
                     "v=" + std::to_string(v) + show(" adim(G) vs adim(G-v)+1", adim, "<=", after + 1), g, seed);
        }
        for (auto e : g.edges()) {
            const Graph h = delete_edge(g, e);
            if (!is_connected(h))
                continue;
            const std::string tag = "e=(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") ";
            const int a = solve_adim(h, {threads}).value;
            c.expect(adim - 1 <= a && a <= adim + 1, "adim-edge-deletion",
                     tag + "adim(G)=" + std::to_string(adim) + " adim(G-e)=" + std::to_string(a), g, seed);
            const int dd = solve_dim(h, {threads}).value;
            c.expect(dd <= dim + 2, "dim-edge-deletion", tag + show("dim(G-e) vs dim(G)+2", dd, "<=", dim + 2), g, seed);
        }
    }

    const Graph vg = generate(FamilySpec(Family::vdel_gap, {{"k", "2"}}));
    const Graph vg_minus = delete_vertex(vg, vg.order() - 1).graph;
    const auto before = solve_all(vg, threads);
    const auto after = solve_all(vg_minus, threads);
    c.expect(before.dim.value == 3 && before.bdim.value == 3 && before.adim.value == 3, "vdel-gap-before",
             "dim/bdim/adim of vdel_gap(2) = " + std::to_string(before.dim.value) + "/" + std::to_string(before.bdim.value)
                 + "/" + std::to_string(before.adim.value),
             vg);
    c.expect(after.dim.value == 4 && after.bdim.value == 4 && after.adim.value == 4, "vdel-gap-after",
             "after deleting v: " + std::to_string(after.dim.value) + "/" + std::to_string(after.bdim.value) + "/"
                 + std::to_string(after.adim.value),
             vg_minus);

    const Graph eg = generate(FamilySpec(Family::edge_gap, {{"a", "3"}, {"b", "2"}, {"c", "3"}}));
    const int ea = solve_adim(eg, {threads}).value;
    const int eb = solve_adim(delete_edge(eg, {3, 3 + 3 + 2}), {threads}).value;
    c.expect(ea == 6 && eb == 7, "edge-gap", "adim(G)=" + std::to_string(ea) + " adim(G-e)=" + std::to_string(eb), eg);

    for (int n = 3; n <= 6; ++n) {
        const Graph k = generate(FamilySpec(Family::complete, {{"n", std::to_string(n)}}));
        const int a = solve_adim(k, {threads}).value;
        const int av = solve_adim(delete_vertex(k, 0).graph, {threads}).value;
        const int ae = solve_adim(delete_edge(k, {0, 1}), {threads}).value;
        c.expect(a == av + 1 && ae == a - 1, "complete-sharpness",
                 "adim K_n, K_n - v, K_n - e = " + std::to_string(a) + ", " + std::to_string(av) + ", "
                     + std::to_string(ae),
                 k);
    }
}

void suite_enumeration(Checker& c)
{
    VerifyOptions small = c.options();
    small.max_order = std::min(small.max_order, 5);
    small.samples = 0;
    for (const auto& [g, seed] : corpus(small)) {
        const auto e = enumerate_min_broadcasts(g);
        const int bdim = solve_bdim(g, {c.options().threads}).value;
        c.expect(e.cost == bdim, "enumeration-cost", show("enumeration cost vs bdim", e.cost, "==", bdim), g, seed);
        c.expect(e.broadcasts == brute_force_minima(g, e.cost), "enumeration-set",
                 "enumerated minima differ from brute force at cost " + std::to_string(e.cost), g, seed);
        c.expect(std::is_sorted(e.broadcasts.begin(), e.broadcasts.end()), "enumeration-order", "output not sorted", g,
                 seed);
    }
    const Graph m = generate(FamilySpec(Family::kK2, {{"k", "3"}}));
    const auto em = enumerate_min_broadcasts(m);
    c.expect(em.cost == 3 && em.broadcasts.size() == 8, "kK2",
             "3K2 gives " + std::to_string(em.broadcasts.size()) + " minima of cost " + std::to_string(em.cost), m);
    const Graph p2 = generate(FamilySpec(Family::path, {{"n", "2"}}));
    const auto ep = enumerate_min_broadcasts(p2);
    c.expect(ep.cost == 1 && ep.broadcasts.size() == 2, "P2",
             "P2 gives " + std::to_string(ep.broadcasts.size()) + " minima of cost " + std::to_string(ep.cost), p2);
}

// A resolving broadcast built from random strengths; vertices are topped up
// until it resolves.
Broadcast random_resolving_broadcast(const Graph& g, const DistanceMatrix& d, std::mt19937_64& rng)
{
    const int n = g.order();
    std::vector<int> values(n, 0);
    for (int& x : values)
        x = rng() % 3 == 0 ? static_cast<int>(rng() % 5) : 0;
    if (std::all_of(values.begin(), values.end(), [](int x) { return x == 0; }))
        values[rng() % static_cast<std::uint64_t>(n)] = 1;
    while (!is_resolving_broadcast(g, d, Broadcast(values)))
        ++values[rng() % static_cast<std::uint64_t>(n)];
    return Broadcast(values);
}

void suite_flatten(Checker& c)
{
    const int samples = std::max(c.options().samples, 50);
    for (Family family : {Family::path, Family::cycle})
        for (int n = 4; n <= 12; ++n) {
            const Graph g = generate(FamilySpec(family, {{"n", std::to_string(n)}}));
            const auto d = all_pairs_distances(g);
            for (int i = 0; i < samples; ++i) {
                const std::uint64_t seed = c.options().seed * 31337 + static_cast<std::uint64_t>(n) * 1000 + i
                                           + (family == Family::cycle ? 500 : 0);
                std::mt19937_64 rng(seed);
                const Broadcast f = random_resolving_broadcast(g, d, rng);
                const Broadcast flat = flatten_path_cycle_broadcast(g, f);
                const bool binary = flat.max_value() <= 1;
                c.expect(binary, "flatten-binary", "flattened broadcast has a value above 1", g, seed);
                auto show_values = [](const Broadcast& b) {
                    std::string out;
                    for (int x : b.values())
                        out += (out.empty() ? "" : ",") + std::to_string(x);
                    return "(" + out + ")";
                };
                c.expect(static_cast<bool>(is_resolving_broadcast(g, d, flat)), "flatten-resolving",
                         show_values(f) + " flattens to " + show_values(flat) + ", which does not resolve", g, seed);
                c.expect(flat.cost() <= f.cost(), "flatten-cost", show("cost after vs before", flat.cost(), "<=", f.cost()),
                         g, seed);
            }
        }
}

void suite_subgraph_gap(Checker& c)
{
    for (int k = 3; k <= 4; ++k) {
        const Graph g = generate(FamilySpec(Family::subgraph_gap, {{"k", std::to_string(k)}}));
        const int clique = k * (k + 1) / 2;
        VertexSet keep(clique);
        for (Vertex v = 0; v < clique; ++v)
            keep[v] = v;
        const Graph h = induced_subgraph(g, keep);
        const auto vg = solve_all(g, c.options().threads);
        const auto vh = solve_all(h, c.options().threads);
        const std::string tag = "k=" + std::to_string(k) + " ";
        c.expect(metric_profile(g, all_pairs_distances(g)).finite_diameter == 2, "diameter", tag + "diam(G) != 2", g);
        c.expect(vh.dim.value == clique - 1, "clique-dim", tag + show("dim(H)", vh.dim.value, "==", clique - 1), h);
        c.expect(vg.dim.value <= k, "gap-dim", tag + show("dim(G)", vg.dim.value, "<=", k), g);
        c.expect(vg.dim.value == vg.bdim.value && vg.bdim.value == vg.adim.value, "gap-coincide",
                 tag + "parameters differ on G", g);
        c.expect(vh.dim.value == vh.bdim.value && vh.bdim.value == vh.adim.value, "clique-coincide",
                 tag + "parameters differ on H", h);
    }
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> suites{
        {"chain", suite_chain},
        {"diameter", suite_diameter},
        {"complement", suite_complement},
        {"delta-prime", suite_delta_prime},
        {"bounds", suite_bounds},
        {"characterize", suite_characterize},
        {"counting", suite_counting},
        {"twins", suite_twins},
        {"cap-safety", suite_cap_safety},
        {"formulas", suite_formulas},
        {"sharp", suite_sharp},
        {"grid", suite_grid},
        {"trees", suite_trees},
        {"deletion", suite_deletion},
        {"enumeration", suite_enumeration},
        {"flatten", suite_flatten},
        {"subgraph-gap", suite_subgraph_gap},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_verify(std::string_view suite, const VerifyOptions& options)
{
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name)
            continue;
        Checker c(name, options);
        fn(c);
        out.push_back(c.take());
    }
    if (out.empty())
        throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    return out;
}

} // namespace bdim::cli
