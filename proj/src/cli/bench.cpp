#include "bdim/cli.hpp"

#include <chrono>

namespace bdim::cli {

std::vector<BenchRow> run_bench(int threads)
{
    const std::vector<FamilySpec> specs{
        {Family::path, {{"n", "12"}}},
        {Family::cycle, {{"n", "12"}}},
        {Family::wheel, {{"n", "9"}}},
        {Family::fan, {{"n", "9"}}},
        {Family::petersen, {}},
        {Family::complete_multipartite, {{"parts", "1,2,3,4"}}},
        {Family::grid, {{"dims", "4,4"}}},
        {Family::logn_sharp, {{"k", "3"}}},
        {Family::spider, {{"x", "5"}, {"s", "4"}}},
        {Family::subgraph_gap, {{"k", "4"}}},
        {Family::random_graph, {{"n", "12"}, {"p", "0.3"}, {"seed", "7"}}},
        {Family::random_tree, {{"n", "14"}, {"seed", "7"}}},
    };
    std::vector<BenchRow> rows;
    for (const auto& spec : specs) {
        const Graph g = generate(spec);
        for (Parameter p : {Parameter::dim, Parameter::adim, Parameter::bdim}) {
            const auto start = std::chrono::steady_clock::now();
            SolverResult r = p == Parameter::dim    ? solve_dim(g, {threads})
                             : p == Parameter::adim ? solve_adim(g, {threads})
                                                    : solve_bdim(g, {threads});
            const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
            rows.push_back({spec.describe(), std::string(to_string(p)), g.order(), r.value, ms.count(),
                            r.candidates_examined});
        }
    }
    return rows;
}

} // namespace bdim::cli
