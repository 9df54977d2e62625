#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ashyp::par {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin, end, chunk_index) over [0, total) split into contiguous
/// chunks, one per worker. Callers own determinism: chunk results must be
/// merged in chunk order (or commutatively).
inline void parallel_chunks(std::size_t total, int threads,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
    const int nt = std::min<std::size_t>(effective_threads(threads), total == 0 ? 1 : total);
    if (nt <= 1) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t base = total / nt, extra = total % nt;
    std::size_t begin = 0;
    for (int c = 0; c < nt; ++c) {
        const std::size_t len = base + (static_cast<std::size_t>(c) < extra ? 1 : 0);
        pool.emplace_back(fn, begin, begin + len, c);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace ashyp::par
