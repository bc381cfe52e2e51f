#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "persym/errors.hpp"
#include "persym/persym.hpp"

using namespace persym;

TEST_CASE("build_matrix reads the seed bits as documented") {
    // n=1, k=1, (alpha_1, alpha_2) = (1, 0): rows (1) and (0)
    BitMatrix m = build_matrix(Seed{1, 1, 0b01});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK(m.row_word(0) == 1);
    CHECK(m.row_word(1) == 0);
    CHECK(rank(m) == 1);

    CHECK(rank(build_matrix(Seed{2, 3, 0})) == 0);

    // n=2, k=2, block 1 = (1,0,0), block 2 = (0,1,0):
    // rows (1,0), (0,0), (0,1), (1,0)
    BitMatrix m2 = build_matrix(Seed{2, 2, 0b010'001});
    CHECK(m2.row_word(0) == 0b01);
    CHECK(m2.row_word(1) == 0b00);
    CHECK(m2.row_word(2) == 0b10);
    CHECK(m2.row_word(3) == 0b01);
    CHECK(rank(m2) == 2);
}

TEST_CASE("seed-to-matrix map is injective") {
    for (std::uint64_t a = 0; a < 64; ++a) {
        for (std::uint64_t b = a + 1; b < 64; ++b) {
            BitMatrix ma = build_matrix(Seed{2, 2, a});
            BitMatrix mb = build_matrix(Seed{2, 2, b});
            bool same = true;
            for (int r = 0; r < 4; ++r) same = same && ma.row_word(r) == mb.row_word(r);
            CHECK_FALSE(same);
        }
    }
}

TEST_CASE("rank_of_seed agrees with build_matrix") {
    CHECK(rank_of_seed(Seed{3, 2, 0}) == 0);
    CHECK(rank_of_seed(Seed{1, 2, 0b111}) == 1);  // rows (1,1) and (1,1)

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 6);
        Seed s{n, k, rng() & ((std::uint64_t{1} << ((k + 1) * n)) - 1)};
        CHECK(rank_of_seed(s) == rank(build_matrix(s)));
    }
}

TEST_CASE("a single nonzero block has rank 1 or 2") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 5);
        int block = static_cast<int>(rng() % n);
        std::uint64_t bits = 1 + rng() % ((std::uint64_t{1} << (k + 1)) - 1);
        Seed s{n, k, bits << (block * (k + 1))};
        int r = rank_of_seed(s);
        CHECK(r >= 1);
        CHECK(r <= 2);
    }
}

TEST_CASE("enumerate_distribution on the worked examples") {
    RankDistribution d11 = enumerate_distribution(1, 1);
    CHECK(d11.gamma == std::vector<BigInt>{BigInt(1), BigInt(3)});

    RankDistribution d12 = enumerate_distribution(1, 2);
    CHECK(d12.gamma == std::vector<BigInt>{BigInt(1), BigInt(3), BigInt(4)});

    RankDistribution d36 = enumerate_distribution(3, 6);
    CHECK(d36.gamma == std::vector<BigInt>{BigInt(1), BigInt(21), BigInt(1162), BigInt(20160),
                                           BigInt(258720), BigInt(1128960), BigInt(688128)});
}

TEST_CASE("census invariants on a small grid") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            RankDistribution d = enumerate_distribution(n, k);
            CHECK(d.total() == pow2(static_cast<unsigned long>(k + 1) * n));
            if (k >= 2) {
                CHECK(d.gamma[1] == BigInt(3) * (pow2(static_cast<unsigned long>(n)) - 1));
            } else {
                CHECK(d.gamma[1] == pow2(2ul * static_cast<unsigned long>(n)) - 1);
            }
            for (int i = 0; i <= k; ++i) {
                if (i > std::min(2 * n, k)) CHECK(d.gamma[static_cast<std::size_t>(i)].is_zero());
            }
        }
    }
}

TEST_CASE("enumeration result is independent of the chunking") {
    RankDistribution base = enumerate_distribution(2, 4);
    for (unsigned threads : {1u, 2u, 3u, 5u, 8u}) {
        EnumerateOptions opt;
        opt.threads = threads;
        RankDistribution d = enumerate_distribution(2, 4, opt);
        CHECK(d.gamma == base.gamma);
    }
}

TEST_CASE("budget refusal names the required bit count") {
    CHECK_THROWS_WITH_AS(enumerate_distribution(9, 6), doctest::Contains("needs 63 bits"),
                         BudgetError);
    EnumerateOptions tight;
    tight.budget_bits = 10;
    CHECK_THROWS_WITH_AS(enumerate_distribution(2, 5, tight),
                         doctest::Contains("needs 12 bits > budget 10"), BudgetError);
    // raising the budget unlocks the same shape
    tight.budget_bits = 12;
    CHECK(enumerate_distribution(2, 5, tight).total() == pow2(12));
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(enumerate_distribution(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_distribution(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_matrix(Seed{-1, 2, 0}), std::invalid_argument);
}
