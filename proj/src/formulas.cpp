#include "bdim/formulas.hpp"

#include <algorithm>

namespace bdim {

namespace {

int path_cycle_formula(long long n)
{
    return static_cast<int>((2 * n + 2) / 5);
}

FormulaValue value(int v, std::string citation)
{
    return {v, {}, std::move(citation)};
}

FormulaValue none(std::string reason)
{
    return {std::nullopt, std::move(reason), {}};
}

long long positive(const FamilySpec& spec, const std::string& name)
{
    long long v = spec.integer(name);
    if (v < 1)
        throw InvalidParameters("parameter " + name + " must be positive");
    return v;
}

FormulaValue path_formula(Parameter p, long long n)
{
    if (p == Parameter::dim)
        return value(1, "dim-one-paths");
    if (n <= 3)
        return value(1, "bdim-one");
    return value(path_cycle_formula(n), "paths-cycles");
}

FormulaValue tree_formula(Parameter p, const Graph& g)
{
    const auto t = tree_profile(g);
    if (t.is_path())
        return path_formula(p, t.order);
    if (p == Parameter::dim)
        return value(t.sigma - t.ex, "trees");
    if (auto s = spider_bdim(t))
        return value(s->value, "spiders");
    return none("bdim and adim exceed dim; no closed form for this tree");
}

} // namespace

FormulaValue closed_form(const FormulaQuery& q)
{
    const auto& spec = q.family;
    const Parameter p = q.parameter;
    if (p == Parameter::dim_k)
        return none("no closed forms are catalogued for dim_k");

    switch (spec.family) {
    case Family::path:
        return path_formula(p, positive(spec, "n"));
    case Family::cycle: {
        long long n = spec.integer("n");
        if (n < 3)
            throw InvalidParameters("cycle needs n >= 3");
        if (n == 3)
            return value(2, "complete-empty");
        if (p == Parameter::dim)
            return none("dim of cycles is not catalogued");
        return value(path_cycle_formula(n), "paths-cycles");
    }
    case Family::wheel: {
        long long n = spec.integer("n");
        if (n < 3)
            throw InvalidParameters("wheel needs n >= 3");
        return value(n == 3 || n == 6 ? 3 : path_cycle_formula(n), "wheels");
    }
    case Family::fan: {
        long long n = positive(spec, "n");
        if (n == 1)
            return value(1, "fans");
        if (n <= 3)
            return value(2, "fans");
        return value(n == 6 ? 3 : path_cycle_formula(n), "fans");
    }
    case Family::complete_multipartite: {
        auto parts = spec.list("parts");
        if (parts.size() < 2 || std::any_of(parts.begin(), parts.end(), [](int a) { return a < 1; }))
            throw InvalidParameters("complete multipartite graph needs k >= 2 positive part sizes");
        long long n = 0;
        for (int a : parts)
            n += a;
        const long long k = static_cast<long long>(parts.size());
        const long long s = std::count(parts.begin(), parts.end(), 1);
        return value(static_cast<int>(s == 0 ? n - k : n + s - k - 1), "multipartite");
    }
    case Family::petersen:
        return value(3, "petersen");
    case Family::complete:
    case Family::empty: {
        long long n = positive(spec, "n");
        return value(n == 1 ? 1 : static_cast<int>(n - 1), "complete-empty");
    }
    case Family::star: {
        long long x = positive(spec, "x");
        if (x <= 2)
            return value(1, "bdim-one");
        return value(static_cast<int>(x - 1), "spiders");
    }
    case Family::spider:
    case Family::random_tree:
        return tree_formula(p, generate(spec));
    case Family::grid: {
        auto dims = spec.list("dims");
        if (dims.empty() || std::any_of(dims.begin(), dims.end(), [](int a) { return a < 1; }))
            throw InvalidParameters("grid dimensions must be positive");
        std::erase(dims, 1);
        if (dims.empty())
            return value(1, "bdim-one");
        if (dims.size() == 1)
            return path_formula(p, dims[0]);
        if (dims.size() == 2 && p == Parameter::dim)
            return value(2, "grids");
        return none("only dim of two-dimensional grids is catalogued");
    }
    case Family::logn_sharp: {
        long long k = positive(spec, "k");
        return value(static_cast<int>(k), "logn-sharp");
    }
    default:
        return none("no closed form for family " + std::string(to_string(spec.family)));
    }
}

std::vector<Characterization> characterize_small(const Graph& g, const ComputedValues& values)
{
    const int n = g.order();
    const auto m = static_cast<long long>(g.size());
    const bool tiny = n == 1 || n == 2 || (n == 3 && (m == 1 || m == 2));
    const bool complete_or_empty = m == 0 || m == static_cast<long long>(n) * (n - 1) / 2;

    std::vector<Characterization> out;
    out.push_back({"bdim-one", values.bdim == 1, tiny});
    out.push_back({"adim-one", values.adim == 1, tiny});
    out.push_back({"bdim-two", values.bdim == 2, values.adim == 2});
    if (n >= 2) {
        out.push_back({"bdim-n-minus-one", values.bdim == n - 1, complete_or_empty});
        out.push_back({"adim-n-minus-one", values.adim == n - 1, complete_or_empty});
    }
    return out;
}

} // namespace bdim
