#pragma once

// Internal machinery shared by the exact solvers: incremental partition
// refinement by landmark codes and an ordered parallel task runner.

#include "bdim/metric.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace bdim::detail {

// Vertices grouped by the code prefix seen so far. The graph is resolved
// when every class is a singleton.
struct Partition {
    std::vector<int> class_of;
    int classes = 1;
    int largest = 0;

    explicit Partition(int n = 0) : class_of(n, 0), classes(n > 0 ? 1 : 0), largest(n) {}

    [[nodiscard]] bool discrete() const { return largest <= 1; }
};

class Refiner {
public:
    explicit Refiner(int n)
        : n_(n), width_(n + 2), slot_(static_cast<std::size_t>(n) * width_), stamp_(slot_.size(), 0), sizes_(n)
    {
    }

    // Splits every class of `in` by the landmark values `row` (each in [0, n+1]).
    void refine(const Partition& in, const std::vector<int>& row, Partition& out)
    {
        ++epoch_;
        out.class_of.resize(n_);
        out.classes = 0;
        out.largest = 0;
        for (int v = 0; v < n_; ++v) {
            std::size_t key = static_cast<std::size_t>(in.class_of[v]) * width_ + row[v];
            if (stamp_[key] != epoch_) {
                stamp_[key] = epoch_;
                slot_[key] = out.classes;
                sizes_[out.classes] = 0;
                ++out.classes;
            }
            int id = slot_[key];
            out.class_of[v] = id;
            out.largest = std::max(out.largest, ++sizes_[id]);
        }
    }

private:
    int n_;
    std::size_t width_;
    std::vector<int> slot_;
    std::vector<std::uint64_t> stamp_;
    std::vector<int> sizes_;
    std::uint64_t epoch_ = 0;
};

// Row of landmark values for z truncated at strength t (t == 0: untruncated,
// the infinity sentinel n kept as is).
inline std::vector<int> landmark_row(const DistanceMatrix& d, int z, int t)
{
    std::vector<int> row(d.order());
    for (int v = 0; v < d.order(); ++v)
        row[v] = t > 0 ? std::min(d(v, z), t + 1) : d(v, z);
    return row;
}

inline int distinct_values(const std::vector<int>& row)
{
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Runs fn(0..count-1) and returns the lowest index whose call produced a value,
// together with that value. With several threads, tasks above the best index
// found so far are skipped; the returned pair matches sequential execution.
template <typename Result, typename Fn>
std::optional<std::pair<std::size_t, Result>> first_success(std::size_t count, int threads, Fn&& fn)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto r = fn(i))
                return std::make_pair(i, std::move(*r));
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::optional<Result> best_result;
    std::mutex lock;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load())
                return;
            if (auto r = fn(i)) {
                std::lock_guard guard(lock);
                if (i < best.load()) {
                    best.store(i);
                    best_result = std::move(r);
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (best.load() == count)
        return std::nullopt;
    return std::make_pair(best.load(), std::move(*best_result));
}

// Work done by tasks 0..last (or all of them when last is past the end).
// Tasks after the winner may or may not have run, so they are not counted.
inline long long examined_through(const std::vector<long long>& per_task, std::size_t last)
{
    long long total = 0;
    for (std::size_t i = 0; i < per_task.size() && i <= last; ++i)
        total += per_task[i];
    return total;
}

} // namespace bdim::detail
