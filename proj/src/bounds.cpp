#include "bdim/formulas.hpp"

#include <algorithm>
#include <limits>

namespace bdim {

namespace {

constexpr long long saturated = std::numeric_limits<long long>::max() / 4;

long long sat_add(long long a, long long b)
{
    return std::min(saturated, a + b);
}

long long sat_mul(long long a, long long b)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > saturated / b)
        return saturated;
    return std::min(saturated, a * b);
}

long long sat_pow(long long base, int exp)
{
    long long out = 1;
    for (int i = 0; i < exp && out < saturated; ++i)
        out = sat_mul(out, base);
    return out;
}

BoundRecord check(std::string id, long long lhs, long long rhs, std::string citation)
{
    return {std::move(id), lhs, rhs, lhs <= rhs ? BoundStatus::holds : BoundStatus::violated, std::move(citation)};
}

BoundRecord skip(std::string id, std::string citation)
{
    return {std::move(id), 0, 0, BoundStatus::not_applicable, std::move(citation)};
}

} // namespace

std::string_view to_string(BoundStatus s)
{
    switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
    case BoundStatus::informational: return "informational";
    }
    return "unknown";
}

bool BoundReport::all_hold() const
{
    return std::none_of(records.begin(), records.end(),
                        [](const BoundRecord& r) { return r.status == BoundStatus::violated; });
}

const BoundRecord* BoundReport::find(std::string_view id) const
{
    for (const auto& r : records)
        if (r.id == id)
            return &r;
    return nullptr;
}

int order_diameter_floor(int n, int d)
{
    for (int k = 1;; ++k)
        if (sat_add(k, sat_pow(d, k)) >= n)
            return k;
}

long long hernando_order(int d, int k)
{
    long long sum = 0;
    for (int i = 1; i <= (d + 2) / 3; ++i)
        sum = sat_add(sum, sat_pow(2 * i - 1, k - 1));
    return sat_add(sat_pow(2 * d / 3 + 1, k), sat_mul(k, sum));
}

BoundReport bound_report(const Graph& g, const ComputedValues& v, const MetricProfile& profile, int dp)
{
    const int n = g.order();
    const int d = profile.finite_diameter;
    const bool connected = profile.connected && n >= 2;
    BoundReport r;
    auto& out = r.records;

    if (n >= 2) {
        out.push_back(check("chain-dim-bdim", v.dim, v.bdim, "chain"));
        out.push_back(check("chain-bdim-adim", v.bdim, v.adim, "chain"));
        out.push_back(check("chain-adim-order", v.adim, n - 1, "chain"));
    } else {
        for (const char* id : {"chain-dim-bdim", "chain-bdim-adim", "chain-adim-order"})
            out.push_back(skip(id, "chain"));
    }

    if (connected) {
        out.push_back(check("dim-order-diameter-lower", order_diameter_floor(n, d), v.dim, "order-diameter"));
        out.push_back(check("dim-order-diameter-upper", v.dim, n - d, "order-diameter"));
        out.push_back(check("hernando-dim", n, hernando_order(d, v.dim), "hernando"));
        out.push_back(check("hernando-bdim", n, hernando_order(d, v.bdim), "hernando"));
        out.push_back(check("hernando-adim", n, hernando_order(d, v.adim), "hernando"));
        out.push_back(check("subgraph-diameter-dim", n, sat_pow(d + 1, v.dim), "subgraph-diameter"));
        out.push_back(check("subgraph-diameter-bdim", n, sat_pow(d + 1, v.bdim), "subgraph-diameter"));
        out.push_back(check("diameter-third", d, 3LL * v.bdim, "diameter-sandwich"));
    } else {
        for (const char* id : {"dim-order-diameter-lower", "dim-order-diameter-upper", "hernando-dim", "hernando-bdim",
                               "hernando-adim", "subgraph-diameter-dim", "subgraph-diameter-bdim"})
            out.push_back(skip(id, id[0] == 'd' ? "order-diameter" : id[0] == 'h' ? "hernando" : "subgraph-diameter"));
        out.push_back(skip("diameter-third", "diameter-sandwich"));
    }
    if (connected && d >= 2)
        out.push_back(check("diameter-dim-product", v.bdim, static_cast<long long>(v.dim) * (d - 1), "diameter-sandwich"));
    else
        out.push_back(skip("diameter-dim-product", "diameter-sandwich"));

    out.push_back(check("adim-delta-prime", v.adim, static_cast<long long>(dp + 1) * v.bdim, "delta-prime"));
    out.push_back(check("adim-max-order", n, sat_add(v.adim, sat_pow(2, v.adim)), "max-order"));
    out.push_back(check("adim-max-degree", max_degree(g), sat_add(v.adim, sat_pow(2, v.adim)) - 1, "max-degree"));
    const int omega = clique_number(g);
    out.push_back(check("clique-adim", omega, sat_pow(2, v.adim), "clique"));
    out.push_back(check("clique-bdim", omega, sat_pow(2, v.bdim), "clique"));
    out.push_back(check("counting", counting_lower_bound(n), v.bdim, "counting"));

    BoundRecord info{"bdim-delta-prime-linear", static_cast<long long>(v.bdim) * dp, n, BoundStatus::informational,
                     "delta-prime"};
    out.push_back(info);
    return r;
}

BoundReport bound_report(const Graph& g, const ComputedValues& values)
{
    const auto d = all_pairs_distances(g);
    return bound_report(g, values, metric_profile(g, d), delta_prime(g, d));
}

} // namespace bdim
