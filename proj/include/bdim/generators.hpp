#pragma once

#include "bdim/graph.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bdim {

enum class Family {
    path,
    cycle,
    complete,
    empty,
    star,
    complete_multipartite,
    wheel,
    fan,
    petersen,
    grid,
    logn_sharp,
    logn_sharp_trimmed,
    subgraph_gap,
    vdel_gap,
    edge_gap,
    spider,
    kK2,
    kK2_plus_isolated,
    grid_plus_apex,
    random_graph,
    random_tree,
};

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

// A named family plus its parameters, stored as text ("n" -> "6",
// "parts" -> "1,2,2", "p" -> "0.3") and parsed on access.
struct FamilySpec {
    Family family = Family::path;
    std::map<std::string, std::string> params;

    FamilySpec() = default;
    FamilySpec(Family f, std::map<std::string, std::string> p = {}) : family(f), params(std::move(p)) {}

    // Parses "n=6,k=2" or "n=6 parts=1,2,2" style assignments.
    static FamilySpec parse(std::string_view family, std::string_view assignments);

    [[nodiscard]] long long integer(const std::string& name) const;
    [[nodiscard]] long long integer_or(const std::string& name, long long fallback) const;
    [[nodiscard]] double real(const std::string& name) const;
    // Full unsigned 64-bit range; 0 when absent.
    [[nodiscard]] std::uint64_t seed() const;
    [[nodiscard]] std::vector<int> list(const std::string& name) const;
    [[nodiscard]] bool has(const std::string& name) const { return params.contains(name); }
    [[nodiscard]] std::string describe() const;
};

// Vertex numbering per family:
//   path, cycle: 0..n-1 in order. star: center 0, leaves 1..x.
//   complete_multipartite: parts consecutively. wheel, fan: rim 0..n-1, hub n.
//   petersen: outer cycle 0..4, inner i+5 adjacent to (i+2)%5+5, spokes i~i+5.
//   grid: row-major over the dimensions.
//   logn_sharp(k): v_1..v_k then u_b at k+b, the leftmost digit of b's k-bit
//   string matching v_1.
//   subgraph_gap(k): w_{1,1}, w_{2,1}, w_{2,2}, ..., w_{k,k}, then u_1..u_k.
//   vdel_gap(k): apex 0, triangle i is x_i,y_i,z_i at 1+3i.., v last (3k+1).
//   edge_gap(a,b,c): u_1,u_2,u_3 = 0,1,2, then x_1..x_a, y_1..y_b, z_1..z_c;
//   the extra edge joins x_1 and z_1.
//   spider(x,s): center 0, then each leg outward; the first s legs have length 2.
//   kK2(k): pairs (2i, 2i+1); the isolated vertex, when present, is last.
//   grid_plus_apex(k): k x k grid then the apex.
Graph generate(const FamilySpec& spec);

// B(G1, G2): G1 on k vertices, G2 on 2^k vertices. u_b (vertex k+b) is joined
// to v_i (vertex i) iff digit i of b's k-digit binary string is 1.
Graph bits_construction(const Graph& g1, const Graph& g2);

// Random members of the adim <= k family: j in [1,k], random G1 on j vertices,
// random G2 on 2^j vertices, random subset of the u_b kept.
Graph sample_Hk(int k, std::uint64_t seed);

// Edge set read from mask bits over pairs (0,1),(0,2),...,(n-2,n-1).
Graph labeled_graph(int n, std::uint64_t mask);
std::uint64_t labeled_graph_count(int n);

} // namespace bdim
