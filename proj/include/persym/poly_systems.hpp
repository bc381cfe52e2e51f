#pragma once

#include <array>
#include <cstdint>

#include "persym/gf2.hpp"

namespace persym {

// Matrix of degree-<=1 polynomials a + bT over GF(2), at most 32 entries.
// An assignment is encodable as 2nq bits: entry (j, i) with index e = j*q + i
// takes its constant coefficient from bit 2e and its T coefficient from bit
// 2e+1. That packing fixes the enumeration order of count_rq.
class PolyMatrix {
  public:
    static constexpr int kMaxEntries = 32;

    PolyMatrix(int n, int q);
    static PolyMatrix from_bits(int n, int q, std::uint64_t bits);

    int rows() const { return n_; }
    int cols() const { return q_; }

    GF2Poly at(int j, int i) const { return entries_[static_cast<std::size_t>(j * q_ + i)]; }
    void set(int j, int i, GF2Poly p);

  private:
    int n_ = 0;
    int q_ = 0;
    std::array<GF2Poly, kMaxEntries> entries_{};
};

// Rank over the fraction field for two-column matrices: 0 iff all entries
// are zero, 1 iff nonzero with every 2x2 minor (via det2) the zero
// polynomial, 2 otherwise. Throws for q != 2.
int rank_over_fraction_field(const PolyMatrix& m);

// Exact rank census (r0, r1, r2) of all 2^(4n) two-column assignments.
// Requires 4n <= 28.
std::array<std::uint64_t, 3> census_n_by_2(int n, unsigned threads = 0);

// The six ordered couples of distinct elements from {1, T, T+1} appearing in
// the rank-one two-column family.
const std::array<std::array<GF2Poly, 2>, 6>& special_couples();

// Counts two-column matrices whose every row is (0,0) or the given couple,
// excluding the zero matrix; the couple must be one of special_couples().
// Requires 4n <= 28.
std::uint64_t count_special_pairs(int n, GF2Poly first, GF2Poly second, unsigned threads = 0);

// Number of tuples (Y_1..Y_q), deg Y_i <= k-1, for which every row j of u
// satisfies sum_i Y_i * u(j, i) = 0. Built as the n(k+1) x kq GF(2)
// constraint matrix (coefficient-wise vanishing of n polynomials of degree
// <= k) and resolved through kernel_count. Requires kq <= 62, n(k+1) <= 63.
std::uint64_t count_y_solutions_fixed_u(const PolyMatrix& u, int k);

// Sum of count_y_solutions_fixed_u over all 2^(2nq) assignments, i.e. the
// full solution count of the bilinear system with deg Y_i <= k-1 and
// deg U_j^(i) <= 1. Requires 2nq <= 26.
std::uint64_t count_rq(int n, int k, int q, unsigned threads = 0);

// q=2 solution count split over the six structural classes of the
// U-assignment, in this order:
//   0 zero matrix          3 equal nonzero columns
//   1 first column zero    4 rank one, six-couples family
//   2 second column zero   5 rank two
// `solutions[c]` sums the per-assignment Y-counts of class c and `members[c]`
// counts its assignments; solutions must match eq4.2/4.3/4.4/4.5/4.8/4.10.
struct R2Decomposition {
    std::array<std::uint64_t, 6> solutions{};
    std::array<std::uint64_t, 6> members{};
};
R2Decomposition r2_case_decomposition(int n, int k, unsigned threads = 0);

}  // namespace persym
