#pragma once

#include "bdim/graph.hpp"

#include <optional>
#include <vector>

namespace bdim {

// An exterior major vertex together with its terminal vertices. legs[j] is the
// path from the major vertex out to terminals[j], excluding the major vertex
// itself, listed outward.
struct ExteriorMajor {
    Vertex vertex = 0;
    std::vector<Vertex> terminals;
    std::vector<std::vector<Vertex>> legs;

    [[nodiscard]] int terminal_degree() const { return static_cast<int>(terminals.size()); }
};

// Star with possibly lengthened legs: exactly one major vertex.
struct SpiderShape {
    Vertex center = 0;
    std::vector<int> leg_lengths; // descending
};

struct TreeProfile {
    bool is_tree = false;
    int order = 0;
    std::vector<Vertex> end_vertices;
    std::vector<Vertex> major_vertices;
    std::vector<ExteriorMajor> exterior_majors;
    int sigma = 0; // number of end vertices
    int ex = 0;    // number of exterior major vertices
    std::optional<SpiderShape> spider;

    [[nodiscard]] bool is_path() const { return is_tree && major_vertices.empty(); }
};

// Non-trees produce a profile with is_tree == false and every other field empty.
TreeProfile tree_profile(const Graph& g);

} // namespace bdim
