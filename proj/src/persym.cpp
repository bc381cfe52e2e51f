#include "persym/persym.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

#include "persym/errors.hpp"
#include "persym/parallel.hpp"

namespace persym {

namespace {

void check_shape(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("seed shape: need n >= 1 and k >= 1, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
}

// rank of the 2n x k matrix for one seed value, no allocation
inline int seed_rank(std::uint64_t bits, int n, int k) {
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::array<std::uint64_t, 128> rows;
    int m = 0;
    for (int j = 0; j < n; ++j) {
        std::uint64_t block = bits >> (j * (k + 1));
        rows[m++] = block & mask;
        rows[m++] = (block >> 1) & mask;
    }
    return rank_words(rows.data(), m);
}

}  // namespace

BigInt RankDistribution::total() const {
    BigInt sum;
    for (const auto& g : gamma) sum += g;
    return sum;
}

BitMatrix build_matrix(const Seed& s) {
    check_shape(s.n, s.k);
    if (s.bit_count() > 63) {
        throw std::invalid_argument("seed: (k+1)n = " + std::to_string(s.bit_count()) +
                                    " bits exceeds the 63-bit seed word");
    }
    BitMatrix m(2 * s.n, s.k);
    const std::uint64_t mask = (std::uint64_t{1} << s.k) - 1;
    for (int j = 0; j < s.n; ++j) {
        std::uint64_t block = s.bits >> (j * (s.k + 1));
        m.set_row_word(2 * j, block & mask);
        m.set_row_word(2 * j + 1, (block >> 1) & mask);
    }
    return m;
}

int rank_of_seed(const Seed& s) {
    check_shape(s.n, s.k);
    return seed_rank(s.bits, s.n, s.k);
}

RankDistribution enumerate_distribution(int n, int k, const EnumerateOptions& opt) {
    check_shape(n, k);
    const int bits = (k + 1) * n;
    if (bits > opt.budget_bits || bits > 62) {
        int budget = opt.budget_bits < 62 ? opt.budget_bits : 62;
        throw BudgetError("enumeration of n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " needs " + std::to_string(bits) + " bits > budget " +
                          std::to_string(budget));
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    using Histogram = std::vector<std::uint64_t>;

    std::atomic<std::uint64_t> done{0};
    auto body = [&](std::uint64_t begin, std::uint64_t end, Histogram& local) {
        if (local.empty()) local.assign(static_cast<std::size_t>(k) + 1, 0);
        for (std::uint64_t s = begin; s < end; ++s) {
            ++local[static_cast<std::size_t>(seed_rank(s, n, k))];
        }
    };

    std::vector<Histogram> locals;
    if (opt.progress) {
        // run the scan on worker threads while this thread reports progress
        std::vector<Histogram> result;
        std::thread scan([&] {
            result = detail::for_each_range<Histogram>(total, detail::resolve_threads(opt.threads),
                                                       body, &done);
        });
        auto last = std::chrono::steady_clock::now();
        while (done.load(std::memory_order_relaxed) < total) {
            std::this_thread::sleep_for(std::chrono::milliseconds(50));
            auto now = std::chrono::steady_clock::now();
            std::uint64_t d = done.load(std::memory_order_relaxed);
            if (d < total && now - last >= std::chrono::seconds(1)) {
                opt.progress(d, total);
                last = now;
            }
        }
        scan.join();
        opt.progress(total, total);
        locals = std::move(result);
    } else {
        locals = detail::for_each_range<Histogram>(total, opt.threads, body, nullptr);
    }

    RankDistribution dist;
    dist.n = n;
    dist.k = k;
    dist.gamma.assign(static_cast<std::size_t>(k) + 1, BigInt());
    for (const auto& local : locals) {
        for (std::size_t i = 0; i < local.size(); ++i) dist.gamma[i] += BigInt(local[i]);
    }
    return dist;
}

}  // namespace persym
