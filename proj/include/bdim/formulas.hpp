#pragma once

#include "bdim/generators.hpp"
#include "bdim/metric.hpp"
#include "bdim/resolution.hpp"
#include "bdim/solvers.hpp"
#include "bdim/tree.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bdim {

struct FormulaQuery {
    Parameter parameter = Parameter::bdim;
    FamilySpec family;
};

// A catalog value, or the reason none applies (out of the proved range, or no
// formula known for the family and parameter).
struct FormulaValue {
    std::optional<int> value;
    std::string reason;
    std::string citation;
    explicit operator bool() const { return value.has_value(); }
};

// dim_k queries are never covered. Malformed parameters throw InvalidParameters.
FormulaValue closed_form(const FormulaQuery& q);

struct ComputedValues {
    int dim = 0;
    int adim = 0;
    int bdim = 0;
};

struct Characterization {
    std::string id;
    bool by_value = false;      // what the computed parameter says
    bool by_structure = false;  // what the listed graphs say
    [[nodiscard]] bool agrees() const { return by_value == by_structure; }
};

std::vector<Characterization> characterize_small(const Graph& g, const ComputedValues& values);

enum class BoundStatus { holds, violated, not_applicable, informational };
std::string_view to_string(BoundStatus s);

// Every record reads lhs <= rhs. Values saturate at a large sentinel rather
// than overflow.
struct BoundRecord {
    std::string id;
    long long lhs = 0;
    long long rhs = 0;
    BoundStatus status = BoundStatus::not_applicable;
    std::string citation;
    friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct BoundReport {
    std::vector<BoundRecord> records;
    [[nodiscard]] bool all_hold() const;
    [[nodiscard]] const BoundRecord* find(std::string_view id) const;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(const Graph& g, const ComputedValues& values, const MetricProfile& profile, int dp);
BoundReport bound_report(const Graph& g, const ComputedValues& values);

// Least k >= 1 with k + d^k >= n.
int order_diameter_floor(int n, int d);
// (floor(2d/3)+1)^k + k * sum_{i=1}^{ceil(d/3)} (2i-1)^(k-1), saturating.
long long hernando_order(int d, int k);

// Label of each vertex outside X: digit i is '1' iff the vertex is adjacent to
// X[i]. Pairs are sorted by vertex.
std::vector<std::pair<Vertex, std::string>> adim_labeling_certificate(const Graph& g, std::span<const Vertex> X);

// Checks W against the legs-minus-one-per-exterior-major description of the
// minimum resolving sets of a tree.
bool verify_zhang_structure(const Graph& t, std::span<const Vertex> W);

struct SpiderBroadcast {
    int value = 0;
    Broadcast witness;
};

// Trees with bdim = dim: P2, P3 and stars with at most x-1 legs subdivided once.
std::optional<SpiderBroadcast> spider_bdim(const TreeProfile& t);

} // namespace bdim
