#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace persym::detail {

inline unsigned resolve_threads(unsigned requested) {
    unsigned t = requested ? requested : std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (t > 128) t = 128;
    return t;
}

// Runs body(begin, end, local) over contiguous slices of [0, total) and
// returns the per-thread locals in slice order, so any merge is independent
// of the thread count. Work inside a slice is further cut into blocks of
// 2^20 so `done` tracks progress at a useful granularity.
template <class Local, class Body>
std::vector<Local> for_each_range(std::uint64_t total, unsigned threads, const Body& body,
                                  std::atomic<std::uint64_t>* done = nullptr) {
    unsigned t = resolve_threads(threads);
    if (static_cast<std::uint64_t>(t) > total && total > 0) t = static_cast<unsigned>(total);
    if (total == 0) t = 1;
    std::vector<Local> locals(t);
    auto run = [&](unsigned idx) {
        std::uint64_t begin = total / t * idx + std::min<std::uint64_t>(idx, total % t);
        std::uint64_t end = begin + total / t + (idx < total % t ? 1 : 0);
        constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
        for (std::uint64_t b = begin; b < end; b += kBlock) {
            std::uint64_t e = b + kBlock < end ? b + kBlock : end;
            body(b, e, locals[idx]);
            if (done) done->fetch_add(e - b, std::memory_order_relaxed);
        }
    };
    if (t == 1) {
        run(0);
        return locals;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(run, i);
    for (auto& th : pool) th.join();
    return locals;
}

}  // namespace persym::detail
