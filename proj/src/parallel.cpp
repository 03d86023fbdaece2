#include "fairaudit/detail/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace fairaudit::detail {

std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t n, unsigned threads) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    if (n == 0) return ranges;
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    const std::size_t base = n / chunks;
    const std::size_t rem = n % chunks;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < chunks; ++i) {
        const std::size_t len = base + (i < rem ? 1 : 0);
        ranges.emplace_back(begin, begin + len);
        begin += len;
    }
    return ranges;
}

void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    const auto ranges = chunk_ranges(n, threads);
    if (ranges.empty()) return;
    if (ranges.size() == 1) {
        fn(0, ranges[0].first, ranges[0].second);
        return;
    }
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        pool.emplace_back([&, i] {
            try {
                fn(i, ranges[i].first, ranges[i].second);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace fairaudit::detail
