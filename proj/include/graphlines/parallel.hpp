#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace graphlines {

/// Run fn(begin, end, worker_id) over a fixed contiguous split of [0, items).
/// The split depends only on (items, workers), so any merge done in worker
/// order is schedule-independent.
inline void parallel_chunks(long items, int workers,
                            const std::function<void(long, long, int)>& fn) {
    if (items <= 0) return;
    if (workers < 1) workers = 1;
    if (workers == 1 || items < 2 * workers) {
        fn(0, items, 0);
        return;
    }
    std::vector<std::thread> pool;
    const long chunk = (items + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long b = static_cast<long>(w) * chunk;
        const long e = std::min(items, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e, w] { fn(b, e, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace graphlines
