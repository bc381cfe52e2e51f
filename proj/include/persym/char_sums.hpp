#pragma once

#include <cstdint>
#include <vector>

#include "persym/gf2.hpp"
#include "persym/persym.hpp"

namespace persym {

// Truncated tail of a Laurent series in 1/T: bit (i-1) stores the
// coefficient of T^(-i), for i = 1..length. The sum of order k only ever
// reads the first k+1 coefficients, so a tail of length k+1 represents the
// whole coset.
struct LaurentTail {
    int length = 0;
    std::uint32_t bits = 0;

    bool alpha(int i) const { return (bits >> (i - 1)) & 1u; }
};

// Character value of t*y*u: +1 iff the coefficient of T^(-1) vanishes, which
// is the GF(2) dot product of the tail with the coefficients of y*u.
// Requires deg u <= 1 and deg(y*u) < length (so every product coefficient
// meets a stored tail coefficient).
int char_e_of_product(const LaurentTail& t, GF2Poly y, GF2Poly u);

// The order-k sum: over all Y with deg Y <= k-1, the product over blocks j of
// the four-term inner sum over U in {0, 1, T, T+1} of E(t_j Y U). Evaluated
// in factored form (one inner sum per block, not the naive 2^(k+2n)-term
// expansion). Requires 1 <= k <= 16 and every tail length >= k+1.
std::uint64_t f_k_eval(const std::vector<LaurentTail>& tails, int k);

// The tails carrying the same coefficients as a seed (block j of the seed is
// exactly the coefficient window of tail j).
std::vector<LaurentTail> tails_from_seed(const Seed& s);

}  // namespace persym
