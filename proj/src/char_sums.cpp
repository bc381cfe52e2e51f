#include "persym/char_sums.hpp"

#include <stdexcept>
#include <string>

namespace persym {

namespace {

inline int sign_of_parity(std::uint64_t word) {
    return (__builtin_popcountll(word) & 1) ? -1 : 1;
}

}  // namespace

int char_e_of_product(const LaurentTail& t, GF2Poly y, GF2Poly u) {
    if (u.degree() > 1) {
        throw std::invalid_argument("char_e_of_product: deg u must be <= 1");
    }
    // multiply from the low-popcount side: u has at most two terms
    GF2Poly p = poly_mul(u, y);
    if (p.degree() >= t.length) {
        throw std::invalid_argument("char_e_of_product: product degree " +
                                    std::to_string(p.degree()) + " reaches past the stored tail (" +
                                    std::to_string(t.length) + " coefficients)");
    }
    // coefficient of T^(-1) in t*p is sum_m p_m * alpha_(m+1)
    return sign_of_parity(p.bits() & t.bits);
}

std::uint64_t f_k_eval(const std::vector<LaurentTail>& tails, int k) {
    if (k < 1 || k > 16) {
        throw std::invalid_argument("f_k_eval: supported order is 1 <= k <= 16, got k=" +
                                    std::to_string(k));
    }
    for (const auto& t : tails) {
        if (t.length < k + 1) {
            throw std::invalid_argument("f_k_eval: tails need at least k+1 = " +
                                        std::to_string(k + 1) + " coefficients");
        }
    }
    static const GF2Poly kUnits[3] = {GF2Poly::one(), GF2Poly::t(), GF2Poly(3)};
    std::uint64_t total = 0;
    for (std::uint64_t y_bits = 0; y_bits < (std::uint64_t{1} << k); ++y_bits) {
        GF2Poly y(y_bits);
        std::uint64_t prod = 1;
        for (const auto& t : tails) {
            // E(t*y*0) = E(0) = +1; the three nonzero choices carry the signs
            int inner = 1 + char_e_of_product(t, y, kUnits[0]) +
                        char_e_of_product(t, y, kUnits[1]) + char_e_of_product(t, y, kUnits[2]);
            if (inner == 0) {
                prod = 0;
                break;
            }
            prod *= static_cast<std::uint64_t>(inner);
        }
        total += prod;
    }
    return total;
}

std::vector<LaurentTail> tails_from_seed(const Seed& s) {
    std::vector<LaurentTail> tails(static_cast<std::size_t>(s.n));
    const std::uint64_t mask = (std::uint64_t{1} << (s.k + 1)) - 1;
    for (int j = 0; j < s.n; ++j) {
        tails[static_cast<std::size_t>(j)].length = s.k + 1;
        tails[static_cast<std::size_t>(j)].bits =
            static_cast<std::uint32_t>((s.bits >> (j * (s.k + 1))) & mask);
    }
    return tails;
}

}  // namespace persym
