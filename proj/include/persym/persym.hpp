#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/gf2.hpp"

namespace persym {

// Coefficient seed for one stacked matrix: n blocks of k+1 bits, where bit
// (j-1)(k+1)+(i-1) stores the i-th coefficient of block j. The seed integer
// therefore ranges over [0, 2^((k+1)n)), and that packing is part of the CLI
// contract, so it must never change.
struct Seed {
    int n = 1;
    int k = 1;
    std::uint64_t bits = 0;

    int bit_count() const { return (k + 1) * n; }
    // coefficient alpha_i of block j, with 1 <= j <= n, 1 <= i <= k+1
    bool alpha(int j, int i) const { return (bits >> ((j - 1) * (k + 1) + (i - 1))) & 1u; }
};

// Exact rank census for fixed (n, k): gamma[i] counts the seeds whose matrix
// has rank exactly i.
struct RankDistribution {
    int n = 0;
    int k = 0;
    std::vector<BigInt> gamma;

    BigInt total() const;
};

// The 2n x k matrix determined by a seed: block j contributes the row pair
//   (alpha_1 .. alpha_k) and (alpha_2 .. alpha_{k+1}).
// The map seed -> matrix is injective (the two rows of a block recover all
// k+1 coefficients).
BitMatrix build_matrix(const Seed& s);

int rank_of_seed(const Seed& s);

struct EnumerateOptions {
    int budget_bits = 30;
    unsigned threads = 0;  // 0 = hardware concurrency
    // invoked roughly once per second with (seeds done, seeds total)
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Scans every seed integer in [0, 2^((k+1)n)) and returns the exact census.
// Work is split into contiguous seed ranges with per-range histograms merged
// by addition, so the result is identical for every thread count.
// Throws BudgetError (naming the required bit count) if (k+1)n exceeds the
// budget.
RankDistribution enumerate_distribution(int n, int k, const EnumerateOptions& opt = {});

}  // namespace persym
