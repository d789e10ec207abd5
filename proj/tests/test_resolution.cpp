#include "bdim/generators.hpp"
#include "bdim/resolution.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace bdim;

namespace {

Graph family(Family f, std::map<std::string, std::string> p = {})
{
    return generate(FamilySpec(f, std::move(p)));
}

Broadcast ones(int n, std::vector<Vertex> s)
{
    return Broadcast::indicator(n, s);
}

const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
const Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});

} // namespace

TEST_CASE("broadcast value type")
{
    const Broadcast f({0, 2, 0, 3});
    CHECK(f.cost() == 5);
    CHECK(f.support() == VertexSet{1, 3});
    CHECK(f.max_value() == 3);
    CHECK_THROWS_AS(Broadcast({1, -1}), std::invalid_argument);
    CHECK(ones(4, {0, 2}).values() == std::vector<int>{1, 0, 1, 0});
    CHECK(Broadcast({0, 1}) < Broadcast({1, 0}));
}

TEST_CASE("broadcast codes")
{
    const auto d = all_pairs_distances(p4);
    const Broadcast f({2, 0, 0, 0});
    CHECK(broadcast_code(d, f, 3).entries == std::vector<int>{3});
    CHECK(broadcast_code(d, f, 0).entries == std::vector<int>{0});
    CHECK(broadcast_code(all_pairs_distances(two_k2), Broadcast({1, 0, 1, 0}), 3).entries == std::vector<int>{2, 1});
    CHECK_THROWS_AS((void)broadcast_code(d, Broadcast({0, 0, 0, 0}), 1), std::invalid_argument);
    // Deterministic.
    CHECK(broadcast_code(d, f, 2) == broadcast_code(d, f, 2));
}

TEST_CASE("resolving broadcast examples")
{
    const Graph p5 = family(Family::path, {{"n", "5"}});
    const auto d5 = all_pairs_distances(p5);
    // 1 at {0,3}: vertices 2 and 4 both get code (2,1).
    const auto bad = is_resolving_broadcast(p5, d5, ones(5, {0, 3}));
    CHECK_FALSE(bad);
    REQUIRE(bad.unresolved.has_value());
    CHECK(*bad.unresolved == Edge{2, 4});
    CHECK(is_resolving_broadcast(p5, d5, ones(5, {1, 3})));

    const Graph k3 = family(Family::complete, {{"n", "3"}});
    CHECK(is_resolving_broadcast(k3, all_pairs_distances(k3), ones(3, {0, 1})));

    // Twins left unbroadcast stay unresolved.
    const Graph c4 = family(Family::cycle, {{"n", "4"}});
    const auto v = is_resolving_broadcast(c4, all_pairs_distances(c4), Broadcast({0, 5, 0, 0}));
    CHECK_FALSE(v);
    CHECK(*v.unresolved == Edge{0, 2});

    CHECK_THROWS_AS((void)is_resolving_broadcast(p4, all_pairs_distances(p4), Broadcast({0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("resolving set examples")
{
    for (int n = 2; n <= 8; ++n) {
        const Graph p = family(Family::path, {{"n", std::to_string(n)}});
        CHECK(is_resolving_set(p, all_pairs_distances(p), VertexSet{0}));
    }
    const Graph k4 = family(Family::complete, {{"n", "4"}});
    const auto v = is_resolving_set(k4, all_pairs_distances(k4), VertexSet{0, 1});
    CHECK_FALSE(v);
    CHECK(*v.unresolved == Edge{2, 3});

    const Graph pet = family(Family::petersen);
    const auto dp = all_pairs_distances(pet);
    for (Vertex z = 0; z < 10; ++z)
        CHECK_FALSE(is_resolving_set(pet, dp, VertexSet{z}));
    CHECK_THROWS_AS((void)is_resolving_set(pet, dp, VertexSet{}), std::invalid_argument);
}

TEST_CASE("adjacency resolving set examples")
{
    const auto d = all_pairs_distances(p4);
    const auto v = is_adjacency_resolving_set(p4, d, VertexSet{1});
    CHECK_FALSE(v);
    CHECK(*v.unresolved == Edge{0, 2});
    CHECK(is_adjacency_resolving_set(p4, d, VertexSet{0, 2}));

    for (int n = 2; n <= 6; ++n) {
        const Graph k = family(Family::complete, {{"n", std::to_string(n)}});
        const auto dk = all_pairs_distances(k);
        for (Vertex skip = 0; skip < n; ++skip) {
            VertexSet s;
            for (Vertex x = 0; x < n; ++x)
                if (x != skip)
                    s.push_back(x);
            CHECK(is_adjacency_resolving_set(k, dk, s));
        }
    }
}

TEST_CASE("distance-k resolution matches the oracle")
{
    for (const auto& g : oracle::all_graphs(4)) {
        const int n = g.order();
        const auto d = all_pairs_distances(g);
        const auto fw = oracle::floyd_warshall(g);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet s;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            for (int t = 0; t <= 3; ++t) {
                std::vector<int> strength(n, -1);
                for (Vertex v : s)
                    strength[v] = t;
                const bool expected = oracle::resolves(fw, strength);
                if (t == 0)
                    CHECK(static_cast<bool>(is_resolving_set(g, d, s)) == expected);
                else
                    CHECK(static_cast<bool>(is_distance_k_resolving_set(g, d, s, t)) == expected);
                if (t == 1)
                    CHECK(static_cast<bool>(is_adjacency_resolving_set(g, d, s)) == expected);
            }
        }
    }
    CHECK_THROWS_AS((void)is_distance_k_resolving_set(p4, all_pairs_distances(p4), VertexSet{0}, 0),
                    std::invalid_argument);
}

TEST_CASE("adjacency resolution equals resolution by the indicator broadcast")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(n, 0.4, rng());
        const auto d = all_pairs_distances(g);
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2)
                s.push_back(v);
        if (s.empty())
            s.push_back(0);
        const auto a = is_adjacency_resolving_set(g, d, s);
        const auto b = is_resolving_broadcast(g, d, Broadcast::indicator(n, s));
        CHECK(a.resolving == b.resolving);
        CHECK(a.unresolved == b.unresolved);
    }
}

TEST_CASE("raising a support value keeps a broadcast resolving")
{
    std::mt19937_64 rng(23);
    int tested = 0;
    for (int i = 0; i < 2000 && tested < 300; ++i) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.5, rng());
        const auto d = all_pairs_distances(g);
        std::vector<int> values(n);
        for (int& x : values)
            x = static_cast<int>(rng() % 3);
        if (std::all_of(values.begin(), values.end(), [](int x) { return x == 0; }))
            continue;
        Broadcast f(values);
        if (!is_resolving_broadcast(g, d, f))
            continue;
        ++tested;
        for (Vertex v : f.support()) {
            auto raised = values;
            raised[v] += 1 + static_cast<int>(rng() % 3);
            CHECK(is_resolving_broadcast(g, d, Broadcast(raised)));
        }
    }
    CHECK(tested > 50);
}

TEST_CASE("counting condition")
{
    CHECK(counting_feasible(10, ones(10, {0, 1, 2})));
    CHECK_FALSE(counting_feasible(10, ones(10, {0, 1})));
    CHECK(counting_feasible(5, Broadcast({4, 0, 0, 0, 0})));

    // Necessary for resolution.
    for (const auto& g : oracle::all_graphs(4)) {
        const auto d = all_pairs_distances(g);
        const int n = g.order();
        std::vector<int> f(n, 0);
        for (;;) {
            int i = 0;
            while (i < n && f[i] == 2)
                f[i++] = 0;
            if (i == n)
                break;
            ++f[i];
            Broadcast b(f);
            if (is_resolving_broadcast(g, d, b))
                CHECK(counting_feasible(g, b));
        }
    }
}
