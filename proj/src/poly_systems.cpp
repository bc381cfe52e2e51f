#include "persym/poly_systems.hpp"

#include <stdexcept>
#include <string>

#include "persym/errors.hpp"
#include "persym/parallel.hpp"

namespace persym {

namespace {

void check_budget_4n(int n) {
    if (n < 1) throw std::invalid_argument("census: need n >= 1");
    if (4 * n > 28) {
        throw BudgetError("two-column scan of n=" + std::to_string(n) + " needs " +
                          std::to_string(4 * n) + " bits > budget 28");
    }
}

// fills the n(k+1) x kq coefficient-wise constraint matrix for a fixed u:
// row j(k+1)+d constrains the degree-d coefficient of sum_i Y_i u(j,i);
// column i*k+m is the degree-m coefficient of Y_i (contributing when
// d - m is a set coefficient of u(j,i))
void build_constraints(const PolyMatrix& u, int k, BitMatrix& out) {
    const int n = u.rows(), q = u.cols();
    out.resize(n * (k + 1), k * q);
    const std::uint64_t ymask = (std::uint64_t{1} << k) - 1;
    for (int j = 0; j < n; ++j) {
        for (int d = 0; d <= k; ++d) {
            std::uint64_t word = 0;
            for (int i = 0; i < q; ++i) {
                GF2Poly p = u.at(j, i);
                std::uint64_t hits = 0;
                if (p.coeff(0)) hits |= std::uint64_t{1} << d;         // m = d
                if (d >= 1 && p.coeff(1)) hits |= std::uint64_t{1} << (d - 1);
                word |= (hits & ymask) << (i * k);
            }
            out.set_row_word(j * (k + 1) + d, word);
        }
    }
}

int classify_r2(const PolyMatrix& u) {
    const int n = u.rows();
    bool col0_zero = true, col1_zero = true, cols_equal = true;
    for (int j = 0; j < n; ++j) {
        if (!u.at(j, 0).is_zero()) col0_zero = false;
        if (!u.at(j, 1).is_zero()) col1_zero = false;
        if (u.at(j, 0) != u.at(j, 1)) cols_equal = false;
    }
    if (col0_zero && col1_zero) return 0;
    if (col0_zero) return 1;
    if (col1_zero) return 2;
    if (cols_equal) return 3;
    return rank_over_fraction_field(u) == 1 ? 4 : 5;
}

}  // namespace

PolyMatrix::PolyMatrix(int n, int q) : n_(n), q_(q) {
    if (n < 1 || q < 1 || n * q > kMaxEntries) {
        throw std::invalid_argument("PolyMatrix: shape " + std::to_string(n) + "x" +
                                    std::to_string(q) + " unsupported");
    }
}

PolyMatrix PolyMatrix::from_bits(int n, int q, std::uint64_t bits) {
    PolyMatrix m(n, q);
    for (int e = 0; e < n * q; ++e) {
        m.entries_[static_cast<std::size_t>(e)] = GF2Poly((bits >> (2 * e)) & 3u);
    }
    return m;
}

void PolyMatrix::set(int j, int i, GF2Poly p) {
    if (p.degree() > 1) {
        throw std::invalid_argument("PolyMatrix: entries must have degree <= 1");
    }
    entries_[static_cast<std::size_t>(j * q_ + i)] = p;
}

int rank_over_fraction_field(const PolyMatrix& m) {
    if (m.cols() != 2) {
        throw std::invalid_argument("rank_over_fraction_field: only two-column matrices (got q=" +
                                    std::to_string(m.cols()) + ")");
    }
    const int n = m.rows();
    bool nonzero = false;
    for (int j = 0; j < n && !nonzero; ++j) {
        nonzero = !m.at(j, 0).is_zero() || !m.at(j, 1).is_zero();
    }
    if (!nonzero) return 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!det2(m.at(a, 0), m.at(a, 1), m.at(b, 0), m.at(b, 1)).is_zero()) return 2;
        }
    }
    return 1;
}

std::array<std::uint64_t, 3> census_n_by_2(int n, unsigned threads) {
    check_budget_4n(n);
    const std::uint64_t total = std::uint64_t{1} << (4 * n);
    using Local = std::array<std::uint64_t, 3>;
    auto locals = detail::for_each_range<Local>(
        total, threads, [n](std::uint64_t begin, std::uint64_t end, Local& local) {
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                PolyMatrix m = PolyMatrix::from_bits(n, 2, bits);
                ++local[static_cast<std::size_t>(rank_over_fraction_field(m))];
            }
        });
    std::array<std::uint64_t, 3> out{};
    for (const auto& l : locals) {
        for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] += l[static_cast<std::size_t>(i)];
    }
    return out;
}

const std::array<std::array<GF2Poly, 2>, 6>& special_couples() {
    static const std::array<std::array<GF2Poly, 2>, 6> kCouples = {{
        {GF2Poly::t(), GF2Poly(3)},
        {GF2Poly(3), GF2Poly::t()},
        {GF2Poly::one(), GF2Poly(3)},
        {GF2Poly(3), GF2Poly::one()},
        {GF2Poly::one(), GF2Poly::t()},
        {GF2Poly::t(), GF2Poly::one()},
    }};
    return kCouples;
}

std::uint64_t count_special_pairs(int n, GF2Poly first, GF2Poly second, unsigned threads) {
    check_budget_4n(n);
    bool listed = false;
    for (const auto& c : special_couples()) listed |= (c[0] == first && c[1] == second);
    if (!listed) {
        throw std::invalid_argument("count_special_pairs: couple is not one of the six "
                                    "rank-one row pairs");
    }
    // the predicate only ever sees degree <= 1 rows, so compare 4-bit row codes
    const std::uint64_t couple_code = first.bits() | (second.bits() << 2);
    const std::uint64_t total = std::uint64_t{1} << (4 * n);
    auto locals = detail::for_each_range<std::uint64_t>(
        total, threads, [n, couple_code](std::uint64_t begin, std::uint64_t end, std::uint64_t& local) {
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                if (bits == 0) continue;
                bool ok = true;
                for (int j = 0; j < n; ++j) {
                    std::uint64_t row = (bits >> (4 * j)) & 0xFu;
                    if (row != 0 && row != couple_code) {
                        ok = false;
                        break;
                    }
                }
                local += ok;
            }
        });
    std::uint64_t out = 0;
    for (std::uint64_t l : locals) out += l;
    return out;
}

std::uint64_t count_y_solutions_fixed_u(const PolyMatrix& u, int k) {
    const int n = u.rows(), q = u.cols();
    if (k < 1) throw std::invalid_argument("count_y_solutions_fixed_u: need k >= 1");
    if (k * q > 62 || n * (k + 1) > 63) {
        throw BudgetError("constraint system for n=" + std::to_string(n) + " k=" +
                          std::to_string(k) + " q=" + std::to_string(q) +
                          " needs " + std::to_string(k * q) + "x" + std::to_string(n * (k + 1)) +
                          " bits > budget 62x63");
    }
    BitMatrix constraints;
    build_constraints(u, k, constraints);
    return kernel_count(constraints);
}

std::uint64_t count_rq(int n, int k, int q, unsigned threads) {
    if (n < 1 || k < 1 || q < 1) {
        throw std::invalid_argument("count_rq: need n, k, q >= 1");
    }
    if (2 * n * q > 26) {
        throw BudgetError("count_rq over n=" + std::to_string(n) + " q=" + std::to_string(q) +
                          " needs " + std::to_string(2 * n * q) + " bits > budget 26");
    }
    if (k * q > 62 || n * (k + 1) > 63) {
        throw BudgetError("count_rq inner system for n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " q=" + std::to_string(q) +
                          " exceeds the 62x63 constraint budget");
    }
    const std::uint64_t total = std::uint64_t{1} << (2 * n * q);
    auto locals = detail::for_each_range<std::uint64_t>(
        total, threads, [n, k, q](std::uint64_t begin, std::uint64_t end, std::uint64_t& local) {
            BitMatrix scratch;
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                build_constraints(PolyMatrix::from_bits(n, q, bits), k, scratch);
                local += kernel_count(scratch);
            }
        });
    std::uint64_t out = 0;
    for (std::uint64_t l : locals) out += l;
    return out;
}

R2Decomposition r2_case_decomposition(int n, int k, unsigned threads) {
    if (n < 1 || k < 1) throw std::invalid_argument("r2_case_decomposition: need n, k >= 1");
    if (4 * n > 26) {
        throw BudgetError("r2_case_decomposition over n=" + std::to_string(n) + " needs " +
                          std::to_string(4 * n) + " bits > budget 26");
    }
    const std::uint64_t total = std::uint64_t{1} << (4 * n);
    auto locals = detail::for_each_range<R2Decomposition>(
        total, threads, [n, k](std::uint64_t begin, std::uint64_t end, R2Decomposition& local) {
            BitMatrix scratch;
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                PolyMatrix u = PolyMatrix::from_bits(n, 2, bits);
                auto cls = static_cast<std::size_t>(classify_r2(u));
                build_constraints(u, k, scratch);
                local.solutions[cls] += kernel_count(scratch);
                ++local.members[cls];
            }
        });
    R2Decomposition out;
    for (const auto& l : locals) {
        for (std::size_t c = 0; c < 6; ++c) {
            out.solutions[c] += l.solutions[c];
            out.members[c] += l.members[c];
        }
    }
    return out;
}

}  // namespace persym
