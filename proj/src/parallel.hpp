#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace paraf::detail {

// Splits [0, count) into contiguous chunks, one per worker. `body` gets
// (begin, end, worker) and must only write to worker-private state.
template <class Body>
void parallel_chunks(std::size_t count, unsigned jobs, Body&& body) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
    if (workers == 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    for (auto& t : threads) t.join();
}

inline std::size_t worker_count(std::size_t count, unsigned jobs) {
    return std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
}

} // namespace paraf::detail
