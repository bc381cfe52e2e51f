#include "persym/gf2.hpp"

#include <stdexcept>
#include <string>

namespace persym {

BitMatrix::BitMatrix(int rows, int cols) { resize(rows, cols); }

void BitMatrix::resize(int rows, int cols) {
    if (rows < 0 || cols < 0 || cols > kMaxCols) {
        throw std::invalid_argument("BitMatrix: shape " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " unsupported (cols must be 0.." +
                                    std::to_string(kMaxCols) + ")");
    }
    rows_ = rows;
    cols_ = cols;
    words_.assign(static_cast<std::size_t>(rows), 0);
}

void BitMatrix::set(int r, int c, bool v) {
    std::uint64_t bit = std::uint64_t{1} << c;
    if (v) {
        words_[static_cast<std::size_t>(r)] |= bit;
    } else {
        words_[static_cast<std::size_t>(r)] &= ~bit;
    }
}

void BitMatrix::set_row_word(int r, std::uint64_t w) {
    if (cols_ < 64 && (w >> cols_) != 0) {
        throw std::invalid_argument("BitMatrix: row word has bits at or beyond column " +
                                    std::to_string(cols_));
    }
    words_[static_cast<std::size_t>(r)] = w;
}

int rank_words(const std::uint64_t* rows, int count) {
    std::uint64_t basis[64] = {};
    int r = 0;
    for (int i = 0; i < count; ++i) {
        std::uint64_t w = rows[i];
        while (w) {
            int pivot = __builtin_ctzll(w);
            if (basis[pivot]) {
                w ^= basis[pivot];
            } else {
                basis[pivot] = w;
                ++r;
                break;
            }
        }
    }
    return r;
}

int rank(const BitMatrix& m) {
    // forward elimination over a basis keyed by pivot bit; the input rows are
    // only read, never written
    std::uint64_t basis[64] = {};
    int r = 0;
    for (int i = 0; i < m.rows(); ++i) {
        std::uint64_t w = m.row_word(i);
        while (w) {
            int pivot = __builtin_ctzll(w);
            if (basis[pivot]) {
                w ^= basis[pivot];
            } else {
                basis[pivot] = w;
                ++r;
                break;
            }
        }
    }
    return r;
}

std::uint64_t kernel_count(const BitMatrix& m) {
    int dim = m.cols() - rank(m);
    if (dim >= 64) {
        throw std::overflow_error("kernel_count: 2^" + std::to_string(dim) +
                                  " exceeds the representable range");
    }
    return std::uint64_t{1} << dim;
}

GF2Poly poly_mul(GF2Poly p, GF2Poly q) {
    if (p.is_zero() || q.is_zero()) return GF2Poly::zero();
    if (p.degree() + q.degree() > 62) {
        throw std::overflow_error("poly_mul: product degree " +
                                  std::to_string(p.degree() + q.degree()) + " exceeds 62");
    }
    std::uint64_t acc = 0;
    std::uint64_t a = p.bits();
    while (a) {
        int i = __builtin_ctzll(a);
        acc ^= q.bits() << i;
        a &= a - 1;
    }
    return GF2Poly(acc);
}

GF2Poly det2(GF2Poly a, GF2Poly b, GF2Poly c, GF2Poly d) {
    return poly_mul(a, d) + poly_mul(b, c);
}

}  // namespace persym
