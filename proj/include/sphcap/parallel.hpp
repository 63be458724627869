#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace sphcap::par {

// Worker cap for internal parallelism. Defaults to 1; the CLI raises it via
// --threads. Results never depend on this value, only wall time does.
int max_threads();
void set_max_threads(int k);

// Splits [0, n) into fixed-size chunks, maps each chunk independently and
// folds the per-chunk results in chunk order. The partition depends only on
// chunk_size, so the result is bit-identical for any thread count.
//
// Map:  T map(std::int64_t begin, std::int64_t end)
// Fold: void fold(T& acc, const T& partial)
template <class T, class Map, class Fold>
T chunked_reduce(std::int64_t n, std::int64_t chunk_size, T init, Map map, Fold fold) {
    if (n <= 0) return init;
    const std::int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<T> partial(static_cast<std::size_t>(n_chunks));

    const int workers = static_cast<int>(
        std::min<std::int64_t>(max_threads(), n_chunks));
    if (workers <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            const std::int64_t lo = c * chunk_size;
            partial[static_cast<std::size_t>(c)] = map(lo, std::min(n, lo + chunk_size));
        }
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::int64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                const std::int64_t lo = c * chunk_size;
                partial[static_cast<std::size_t>(c)] = map(lo, std::min(n, lo + chunk_size));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    T acc = init;
    for (const T& p : partial) fold(acc, p);
    return acc;
}

}  // namespace sphcap::par
