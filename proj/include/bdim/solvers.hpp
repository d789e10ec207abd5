#pragma once

#include "bdim/graph.hpp"
#include "bdim/metric.hpp"
#include "bdim/resolution.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace bdim {

enum class Parameter { dim, adim, dim_k, bdim };

std::string_view to_string(Parameter p);
Parameter parse_parameter(std::string_view name);

struct SolverOptions {
    // Worker threads for candidate evaluation; results do not depend on it.
    int threads = 1;
};

using Witness = std::variant<VertexSet, Broadcast>;

struct SolverResult {
    Parameter parameter = Parameter::dim;
    int k = 0; // truncation for dim_k, otherwise 0
    int value = 0;
    Witness witness;
    long long candidates_examined = 0;
    int lower_bound_used = 0;
};

// Exact optima with lexicographically least witnesses. Graphs of order 1 get
// value 1 (witness {0} or the broadcast (1)); order 0 is rejected.
SolverResult solve_dim(const Graph& g, const SolverOptions& options = {});
SolverResult solve_adim(const Graph& g, const SolverOptions& options = {});
SolverResult solve_dim_k(const Graph& g, int k, const SolverOptions& options = {});
SolverResult solve_bdim(const Graph& g, const SolverOptions& options = {});

// Per-vertex strength above which a landmark's induced partition no longer
// changes: ecc(v)-1 when v reaches every vertex, ecc(v) otherwise, at least 1.
std::vector<int> strength_caps(const DistanceMatrix& d);

// Smallest total cost s for which some broadcast of cost s meets the counting
// condition |supp| + prod(f+1) >= n.
int counting_lower_bound(int n);

struct EnumerationResult {
    int cost = 0;
    std::vector<Broadcast> broadcasts; // sorted ascending by value vector
    long long candidates_examined = 0;
};

// Every minimum-cost resolving broadcast, found by checking all compositions
// of s = 1, 2, ... over the vertices until a level yields a resolving one.
EnumerationResult enumerate_min_broadcasts(const Graph& g);

// Rewrites a resolving broadcast of a canonically labeled path or cycle
// (n >= 4) into a 0/1-valued one of no greater cost.
Broadcast flatten_path_cycle_broadcast(const Graph& g, const Broadcast& f);

struct VertexDeletion {
    Graph graph;
    std::vector<Vertex> old_id; // old_id[new vertex] = vertex in the original graph
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);

} // namespace bdim
