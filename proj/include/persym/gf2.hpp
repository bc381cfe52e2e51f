#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace persym {

// Dense GF(2) matrix with one 64-bit word per row, bit j = entry in column j.
// Widths above 63 columns are a hard error: nothing downstream needs them and
// single-word rows keep elimination branch-free.
class BitMatrix {
  public:
    static constexpr int kMaxCols = 63;

    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (words_[static_cast<std::size_t>(r)] >> c) & 1u; }
    void set(int r, int c, bool v);
    std::uint64_t row_word(int r) const { return words_[static_cast<std::size_t>(r)]; }
    void set_row_word(int r, std::uint64_t w);

    void resize(int rows, int cols);  // zero-fills

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> words_;
};

// GF(2) row rank, forward elimination with first-set-bit pivoting on a copy.
int rank(const BitMatrix& m);

// rank of raw row words; shared kernel for the hot enumeration paths
int rank_words(const std::uint64_t* rows, int count);

// 2^(cols - rank); exact, throws std::overflow_error if the kernel dimension
// cannot be represented
std::uint64_t kernel_count(const BitMatrix& m);

// Polynomial over GF(2), bit i of coeff_bits = coefficient of T^i.
// The zero polynomial is canonical (all bits clear) and its degree is a
// marker smaller than every integer.
class GF2Poly {
  public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    constexpr GF2Poly() = default;
    explicit constexpr GF2Poly(std::uint64_t coeff_bits) : bits_(coeff_bits) {}

    static constexpr GF2Poly zero() { return GF2Poly(); }
    static constexpr GF2Poly one() { return GF2Poly(1); }
    static constexpr GF2Poly t() { return GF2Poly(2); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    int degree() const {
        return bits_ == 0 ? kMinusInfinity : 63 - __builtin_clzll(bits_);
    }

    bool coeff(int i) const { return (bits_ >> i) & 1u; }

    friend GF2Poly operator+(GF2Poly a, GF2Poly b) { return GF2Poly(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(GF2Poly a, GF2Poly b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(GF2Poly a, GF2Poly b) { return a.bits_ != b.bits_; }

  private:
    std::uint64_t bits_ = 0;
};

// Carry-less product over GF(2); requires deg p + deg q <= 62.
GF2Poly poly_mul(GF2Poly p, GF2Poly q);

// a*d + b*c, the 2x2 determinant of [[a, b], [c, d]] (char 2: minus is plus)
GF2Poly det2(GF2Poly a, GF2Poly b, GF2Poly c, GF2Poly d);

}  // namespace persym
