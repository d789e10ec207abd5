#include "bdim/generators.hpp"
#include "bdim/metric.hpp"
#include "bdim/tree.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace bdim;

namespace {

Graph family(Family f, std::map<std::string, std::string> p = {})
{
    return generate(FamilySpec(f, std::move(p)));
}

int diameter(const Graph& g)
{
    return metric_profile(g, all_pairs_distances(g)).finite_diameter;
}

} // namespace

TEST_CASE("family names round-trip")
{
    for (Family f : all_families())
        CHECK(parse_family(to_string(f)) == f);
    CHECK(parse_family("complete_multipartite") == Family::complete_multipartite);
    CHECK_THROWS_AS((void)parse_family("hypercube"), UnknownFamily);
}

TEST_CASE("parameter parsing")
{
    const auto a = FamilySpec::parse("kpartite", "parts=1,2,2");
    CHECK(a.list("parts") == std::vector<int>{1, 2, 2});
    const auto b = FamilySpec::parse("spider", "x=4,s=2");
    CHECK(b.integer("x") == 4);
    CHECK(b.integer("s") == 2);
    const auto c = FamilySpec::parse("grid", "dims=3,4 ");
    CHECK(c.list("dims") == std::vector<int>{3, 4});
    const auto r = FamilySpec::parse("random_graph", "n=6 p=0.25 seed=9");
    CHECK(r.real("p") == doctest::Approx(0.25));
    CHECK(r.describe() == "random_graph n=6 p=0.25 seed=9");
    CHECK_THROWS_AS((void)FamilySpec::parse("path", "6"), InvalidParameters);
    CHECK_THROWS_AS((void)FamilySpec::parse("path", "n=six").integer("n"), InvalidParameters);
    CHECK_THROWS_AS((void)FamilySpec::parse("path", "").integer("n"), InvalidParameters);
}

TEST_CASE("basic families")
{
    CHECK(family(Family::path, {{"n", "5"}}).size() == 4);
    CHECK(family(Family::cycle, {{"n", "5"}}).size() == 5);
    CHECK(family(Family::complete, {{"n", "5"}}).size() == 10);
    CHECK(family(Family::empty, {{"n", "5"}}).size() == 0);
    const Graph star = family(Family::star, {{"x", "4"}});
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);
    const Graph kp = family(Family::complete_multipartite, {{"parts", "1,2,2"}});
    CHECK(kp.order() == 5);
    CHECK(kp.size() == 8);
    CHECK_FALSE(kp.adjacent(1, 2));
    CHECK(kp.adjacent(0, 1));

    const Graph wheel = family(Family::wheel, {{"n", "5"}});
    CHECK(wheel.order() == 6);
    CHECK(wheel.degree(5) == 5);
    CHECK(wheel.size() == 10);
    const Graph fan = family(Family::fan, {{"n", "5"}});
    CHECK(fan.size() == 9);
    CHECK(fan.degree(5) == 5);

    const Graph pet = family(Family::petersen);
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(pet.degree(v) == 3);
    CHECK(diameter(pet) == 2);
    // Girth 5: no triangles and no 4-cycles means every pair shares at most one neighbor and adjacent pairs none.
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
            int common = 0;
            for (Vertex w = 0; w < 10; ++w)
                common += pet.adjacent(u, w) && pet.adjacent(v, w);
            CHECK(common == (pet.adjacent(u, v) ? 0 : 1));
        }

    const Graph grid = family(Family::grid, {{"dims", "3,4"}});
    CHECK(grid.order() == 12);
    CHECK(grid.size() == 17);
    CHECK(diameter(grid) == 5);
    CHECK(family(Family::grid, {{"dims", "2,2,2"}}).size() == 12);
}

TEST_CASE("logn sharp construction")
{
    for (int k = 1; k <= 4; ++k) {
        const Graph g = family(Family::logn_sharp, {{"k", std::to_string(k)}});
        CHECK(g.order() == k + (1 << k));
        CHECK(clique_number(g) == (1 << k));
        for (int b = 0; b < (1 << k); ++b)
            for (int i = 0; i < k; ++i)
                CHECK(g.adjacent(i, k + b) == static_cast<bool>((b >> (k - 1 - i)) & 1));
        CHECK(g.degree(k + (1 << k) - 1) == k + (1 << k) - 1);
    }
    const Graph t = family(Family::logn_sharp_trimmed, {{"n", "9"}});
    CHECK(t.order() == 9);
    CHECK(t == induced_subgraph(family(Family::logn_sharp, {{"k", "3"}}), std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST_CASE("bits construction and H_k samples")
{
    const Graph g1 = build_graph(2, {{0, 1}});
    const Graph g2 = build_graph(4, {});
    const Graph b = bits_construction(g1, g2);
    CHECK(b.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {0, 5}, {1, 3}, {1, 5}});
    CHECK_THROWS_AS((void)bits_construction(g1, build_graph(3, {})), InvalidParameters);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph h = sample_Hk(3, seed);
        CHECK(h.order() <= 3 + 8);
        CHECK(h == sample_Hk(3, seed));
    }
}

TEST_CASE("gap constructions")
{
    const Graph sg = family(Family::subgraph_gap, {{"k", "4"}});
    CHECK(sg.order() == 14);
    CHECK(clique_number(sg) >= 10);
    CHECK(diameter(sg) == 2);
    // u_1 (vertex 10) sees w_{1,1}=0 and w_{j,1} for j = 2..4.
    auto n10 = sg.neighbors(10);
    CHECK(std::vector<Vertex>(n10.begin(), n10.end()) == std::vector<Vertex>{0, 1, 3, 6});
    CHECK_THROWS_AS((void)family(Family::subgraph_gap, {{"k", "2"}}), InvalidParameters);

    const Graph vg = family(Family::vdel_gap, {{"k", "2"}});
    CHECK(vg.order() == 8);
    CHECK(diameter(vg) == 2);
    CHECK(vg.degree(0) == 6);
    CHECK(vg.degree(7) == 2);
    CHECK(vg.adjacent(7, 2));
    CHECK(vg.adjacent(7, 5));

    const Graph eg = family(Family::edge_gap, {{"a", "3"}, {"b", "2"}, {"c", "3"}});
    CHECK(eg.order() == 11);
    CHECK(eg.size() == 2 + 8 + 1);
    CHECK(eg.adjacent(3, 8));
    CHECK_THROWS_AS((void)family(Family::edge_gap, {{"a", "2"}, {"b", "2"}, {"c", "3"}}), InvalidParameters);

    const Graph ga = family(Family::grid_plus_apex, {{"k", "3"}});
    CHECK(ga.order() == 10);
    CHECK(ga.degree(9) == 9);
}

TEST_CASE("spiders, matchings and trees")
{
    const Graph s = family(Family::spider, {{"x", "4"}, {"s", "2"}});
    CHECK(s.order() == 7);
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {0, 5}, {0, 6}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS((void)family(Family::spider, {{"x", "3"}, {"s", "4"}}), InvalidParameters);

    CHECK(family(Family::kK2, {{"k", "3"}}).edges() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(family(Family::kK2_plus_isolated, {{"k", "2"}}).order() == 5);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 1 + static_cast<int>(seed % 15);
        const Graph t = family(Family::random_tree, {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}});
        CHECK(t.order() == n);
        CHECK(static_cast<int>(t.size()) == n - 1);
        CHECK(is_connected(t));
        CHECK(t == family(Family::random_tree, {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}}));
    }
}

TEST_CASE("random graphs are seeded and reproducible")
{
    const FamilySpec a(Family::random_graph, {{"n", "12"}, {"p", "0.3"}, {"seed", "5"}});
    CHECK(generate(a) == generate(a));
    const FamilySpec b(Family::random_graph, {{"n", "12"}, {"p", "0.3"}, {"seed", "6"}});
    CHECK_FALSE(generate(a) == generate(b));
    CHECK(generate(FamilySpec(Family::random_graph, {{"n", "6"}, {"p", "0"}})).size() == 0);
    CHECK(generate(FamilySpec(Family::random_graph, {{"n", "6"}, {"p", "1"}})).size() == 15);
    CHECK_THROWS_AS((void)generate(FamilySpec(Family::random_graph, {{"n", "6"}, {"p", "1.5"}})), InvalidParameters);
    CHECK(generate(FamilySpec(Family::random_tree, {{"n", "7"}, {"seed", "18446744073709551615"}})).size() == 6);
    CHECK_THROWS_AS((void)generate(FamilySpec(Family::random_tree, {{"n", "7"}, {"seed", "-1"}})), InvalidParameters);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS((void)family(Family::path, {{"n", "0"}}), InvalidParameters);
    CHECK_THROWS_AS((void)family(Family::cycle, {{"n", "2"}}), InvalidParameters);
    CHECK_THROWS_AS((void)family(Family::complete_multipartite, {{"parts", "3"}}), InvalidParameters);
    CHECK_THROWS_AS((void)family(Family::complete_multipartite, {{"parts", "1,0"}}), InvalidParameters);
    CHECK_THROWS_AS((void)family(Family::path, {}), InvalidParameters);
}

TEST_CASE("labeled graphs")
{
    CHECK(labeled_graph_count(5) == 1024);
    CHECK(labeled_graph(3, 0b101).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS((void)labeled_graph_count(12), std::out_of_range);
}
