#ifndef HOLONOMY_THREADING_HPP
#define HOLONOMY_THREADING_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace holonomy::threads {

namespace detail {
inline int initial_count()
{
    if (const char* env = std::getenv("HOLONOMY_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline int& count_ref()
{
    static int n = initial_count();
    return n;
}
}  // namespace detail

inline int count() { return detail::count_ref(); }

inline void set_count(int n)
{
    if (n > 0) detail::count_ref() = n;
}

/// Splits [0, n) into a fixed number of chunks and sums per-chunk partials in
/// chunk order, so results do not depend on the worker count.
template <typename T, typename ChunkFn>
T chunked_sum(std::int64_t n, ChunkFn&& fn, T zero = T{})
{
    if (n <= 0) return zero;
    const std::int64_t n_chunks = std::min<std::int64_t>(n, 256);
    const std::int64_t chunk = (n + n_chunks - 1) / n_chunks;
    std::vector<T> partial(static_cast<std::size_t>(n_chunks), zero);

    const int workers = std::min<std::int64_t>(count(), n_chunks);
    if (workers <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            std::int64_t lo = c * chunk;
            std::int64_t hi = std::min(n, lo + chunk);
            partial[static_cast<std::size_t>(c)] = fn(lo, hi);
        }
    } else {
        std::atomic<std::int64_t> next{0};
        auto work = [&] {
            for (;;) {
                std::int64_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                std::int64_t lo = c * chunk;
                std::int64_t hi = std::min(n, lo + chunk);
                partial[static_cast<std::size_t>(c)] = fn(lo, hi);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    T total = zero;
    for (const T& p : partial) total += p;
    return total;
}

}  // namespace holonomy::threads

#endif
