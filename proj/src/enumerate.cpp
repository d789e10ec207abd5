#include "bdim/solvers.hpp"

#include "search.hpp"

#include <map>

namespace bdim {

namespace {

using detail::Partition;
using detail::Refiner;

// Visits every composition of `cost` into n nonnegative parts in ascending
// lexicographic order. Codes are refined incrementally; nothing is pruned.
class CompositionScan {
public:
    CompositionScan(const DistanceMatrix& d, int cost)
        : d_(d), n_(d.order()), cost_(cost), refiner_(n_), parts_(n_ + 1, Partition(n_)), values_(n_, 0)
    {
    }

    void run(std::vector<Broadcast>& out)
    {
        out_ = &out;
        visit(0, cost_);
    }

    [[nodiscard]] long long examined() const { return examined_; }

private:
    const std::vector<int>& row(Vertex z, int t)
    {
        // Strengths at or above n truncate nothing; share one row for them.
        const int key = std::min(t, n_);
        auto [it, inserted] = rows_.try_emplace({z, key});
        if (inserted)
            it->second = detail::landmark_row(d_, z, key);
        return it->second;
    }

    void visit(int i, int budget)
    {
        if (i == n_ - 1) {
            ++examined_;
            values_[i] = budget;
            const Partition* last = &parts_[i];
            if (budget > 0) {
                refiner_.refine(parts_[i], row(i, budget), parts_[n_]);
                last = &parts_[n_];
            }
            if (last->discrete())
                out_->emplace_back(values_);
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            values_[i] = x;
            if (x == 0)
                parts_[i + 1] = parts_[i];
            else
                refiner_.refine(parts_[i], row(i, x), parts_[i + 1]);
            visit(i + 1, budget - x);
        }
        values_[i] = 0;
    }

    const DistanceMatrix& d_;
    int n_;
    int cost_;
    Refiner refiner_;
    std::vector<Partition> parts_;
    std::vector<int> values_;
    std::map<std::pair<Vertex, int>, std::vector<int>> rows_;
    std::vector<Broadcast>* out_ = nullptr;
    long long examined_ = 0;
};

} // namespace

EnumerationResult enumerate_min_broadcasts(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("enumeration requires a graph with at least one vertex");
    const auto d = all_pairs_distances(g);
    EnumerationResult result;
    for (int cost = 1;; ++cost) {
        CompositionScan scan(d, cost);
        scan.run(result.broadcasts);
        result.candidates_examined += scan.examined();
        if (!result.broadcasts.empty()) {
            result.cost = cost;
            return result;
        }
    }
}

} // namespace bdim
