#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace heegraph {

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into `workers` contiguous chunks, runs `work(begin, end)`
/// on each (in its own thread when workers > 1) and folds the partial results
/// left to right with `merge`.  The fold order is fixed, so the result does
/// not depend on scheduling.
template <typename Result, typename Work, typename Merge>
Result partitioned_reduce(std::uint64_t total, unsigned workers, Work work, Merge merge) {
    workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1)));
    if (workers == 1) return work(std::uint64_t{0}, total);

    std::vector<Result> partials(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
        const std::uint64_t begin = total * i / workers;
        const std::uint64_t end = total * (i + 1) / workers;
        threads.emplace_back([&, i, begin, end] { partials[i] = work(begin, end); });
    }
    for (auto& t : threads) t.join();
    Result acc = std::move(partials.front());
    for (unsigned i = 1; i < workers; ++i) merge(acc, partials[i]);
    return acc;
}

}  // namespace heegraph
