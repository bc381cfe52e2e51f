#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "persym/gf2.hpp"

using namespace persym;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    BitMatrix m(rows, cols);
    const std::uint64_t mask = cols ? (std::uint64_t{1} << cols) - 1 : 0;
    for (int r = 0; r < rows; ++r) m.set_row_word(r, rng() & mask);
    return m;
}

BitMatrix transpose(const BitMatrix& m) {  // test-only helper
    BitMatrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.get(r, c));
    }
    return t;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank(BitMatrix(4, 4)) == 0);

    BitMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK(rank(id) == 3);

    // rows (1,1) and (0,1): the 2x2 determinant over GF(2) is 1
    BitMatrix m(2, 2);
    m.set_row_word(0, 0b11);
    m.set_row_word(1, 0b10);
    CHECK(rank(m) == 2);
}

TEST_CASE("rank caps at min(rows, cols)") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 10);
        int cols = 1 + static_cast<int>(rng() % 10);
        BitMatrix m = random_matrix(rng, rows, cols);
        int r = rank(m);
        CHECK(r <= rows);
        CHECK(r <= cols);
    }
}

TEST_CASE("rank is invariant under elementary row operations") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 12);
        BitMatrix m = random_matrix(rng, rows, cols);
        int before = rank(m);
        int a = static_cast<int>(rng() % rows), b = static_cast<int>(rng() % rows);
        BitMatrix e = m;
        if (rng() & 1) {
            std::uint64_t wa = e.row_word(a);
            e.set_row_word(a, e.row_word(b));
            e.set_row_word(b, wa);
        } else if (a != b) {
            e.set_row_word(a, e.row_word(a) ^ e.row_word(b));
        }
        CHECK(rank(e) == before);
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        BitMatrix m = random_matrix(rng, rows, cols);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("kernel_count on simple matrices") {
    CHECK(kernel_count(BitMatrix(3, 5)) == 32);

    BitMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK(kernel_count(id) == 1);
}

TEST_CASE("kernel_count satisfies rank-nullity and matches literal enumeration") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 12);
        BitMatrix m = random_matrix(rng, rows, cols);

        std::uint64_t kc = kernel_count(m);
        CHECK(kc * (std::uint64_t{1} << rank(m)) == std::uint64_t{1} << cols);

        std::uint64_t by_hand = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
            bool in_kernel = true;
            for (int r = 0; r < rows && in_kernel; ++r) {
                in_kernel = (__builtin_popcountll(m.row_word(r) & x) & 1) == 0;
            }
            by_hand += in_kernel;
        }
        CHECK(kc == by_hand);
    }
}

TEST_CASE("BitMatrix rejects bad shapes and stray bits") {
    CHECK_THROWS_AS(BitMatrix(2, 64), std::invalid_argument);
    BitMatrix m(1, 3);
    CHECK_THROWS_AS(m.set_row_word(0, 0b1000), std::invalid_argument);
}

TEST_CASE("GF2Poly degree rules") {
    CHECK(GF2Poly::zero().degree() == GF2Poly::kMinusInfinity);
    CHECK(GF2Poly::kMinusInfinity < -1000000);
    CHECK(GF2Poly::one().degree() == 0);
    CHECK(GF2Poly::t().degree() == 1);
    CHECK(GF2Poly(0b1011).degree() == 3);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        GF2Poly p(rng() & 0x7FFFFFF), q(rng() & 0x7FFFFFF);
        if (p.is_zero() || q.is_zero()) {
            CHECK(poly_mul(p, q).is_zero());
        } else {
            CHECK(poly_mul(p, q).degree() == p.degree() + q.degree());
        }
    }
}

TEST_CASE("poly_mul small identities") {
    GF2Poly t = GF2Poly::t(), one = GF2Poly::one();
    CHECK(poly_mul(t, t + one) == GF2Poly(0b110));          // T^2 + T
    CHECK(poly_mul(GF2Poly(0b1101), GF2Poly::zero()).is_zero());
    CHECK(poly_mul(one + t, one + t) == GF2Poly(0b101));    // 1 + T^2 in char 2
}

TEST_CASE("poly_mul is commutative and associative") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        GF2Poly a(rng() & 0xFFFFF), b(rng() & 0xFFFFF), c(rng() & 0xFFFFF);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    }
}

TEST_CASE("poly_mul degree overflow") {
    CHECK_THROWS_AS(poly_mul(GF2Poly(std::uint64_t{1} << 40), GF2Poly(std::uint64_t{1} << 30)),
                    std::overflow_error);
}

TEST_CASE("det2 examples") {
    GF2Poly t = GF2Poly::t(), one = GF2Poly::one(), zero = GF2Poly::zero();
    CHECK(det2(t, t + one, t, t + one).is_zero());
    CHECK(det2(t, t + one, zero, one) == t);
    CHECK(det2(one, zero, zero, one) == one);
}
