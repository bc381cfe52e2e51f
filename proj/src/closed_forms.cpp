#include "persym/closed_forms.hpp"

#include <stdexcept>

#include "persym/errors.hpp"

namespace persym {

namespace {

void check_nk(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("formula catalog: need n >= 1 and k >= 1, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
}

BigInt p2n(long c, int n) { return pow2(static_cast<unsigned long>(c) * n); }

// the k >= 3 closed form for gamma_2:
//   7*2^(2n) + (2^(k+1) - 25)*2^n - 2^(k+1) + 18
BigInt gamma2_general(int n, int k) {
    BigInt pk1 = pow2(static_cast<unsigned long>(k) + 1);
    return BigInt(7) * p2n(2, n) + (pk1 - 25) * p2n(1, n) - pk1 + 18;
}

// the k >= 4 closed form for gamma_3:
//   15*2^(3n) + (7*2^k - 133)*2^(2n) + (294 - 21*2^k)*2^n - 176 + 14*2^k
BigInt gamma3_general(int n, int k) {
    BigInt pk = pow2(static_cast<unsigned long>(k));
    return BigInt(15) * p2n(3, n) + (BigInt(7) * pk - 133) * p2n(2, n) +
           (BigInt(294) - BigInt(21) * pk) * p2n(1, n) - 176 + BigInt(14) * pk;
}

}  // namespace

std::optional<FormulaResult> gamma_closed(int n, int k, int i) {
    check_nk(n, k);
    if (i < 0 || i > k) {
        throw std::invalid_argument("gamma_closed: need 0 <= i <= k, got i=" + std::to_string(i));
    }
    switch (i) {
        case 0:
            return FormulaResult{BigInt(1), "eq5.1", "n>=1, k>=1"};
        case 1:
            if (k == 1) return FormulaResult{p2n(2, n) - 1, "lemma5.2:k1", "n>=1, k=1"};
            return FormulaResult{BigInt(3) * (p2n(1, n) - 1), "eq2.5", "n>=1, k>=2"};
        case 2:
            if (k == 2) {
                return FormulaResult{p2n(3, n) - BigInt(3) * p2n(1, n) + 2, "lemma5.2:k2",
                                     "n>=1, k=2"};
            }
            return FormulaResult{gamma2_general(n, k), "eq5.4", "n>=1, k>=3"};
        case 3:
            if (k == 3) {
                return FormulaResult{p2n(4, n) - BigInt(7) * p2n(2, n) + BigInt(6) * p2n(1, n),
                                     "lemma5.2:k3", "n>=1, k=3"};
            }
            return FormulaResult{gamma3_general(n, k), "eq5.7", "n>=1, k>=4"};
        case 4:
            if (k == 4) {
                return FormulaResult{p2n(5, n) - BigInt(15) * p2n(3, n) + BigInt(14) * p2n(2, n) +
                                         BigInt(32) * p2n(1, n) - 32,
                                     "lemma5.2:k4", "n>=1, k=4"};
            }
            if (k == 5) {
                return FormulaResult{BigInt(31) * p2n(4, n) - BigInt(45) * p2n(3, n) -
                                         BigInt(322) * p2n(2, n) + BigInt(816) * p2n(1, n) - 480,
                                     "eq5.10", "n>=1, k=5"};
            }
            if (k == 6) {
                return FormulaResult{BigInt(31) * p2n(4, n) + BigInt(515) * p2n(3, n) -
                                         BigInt(2450) * p2n(2, n) + BigInt(3280) * p2n(1, n) - 1376,
                                     "eq5.11", "n>=1, k=6"};
            }
            return std::nullopt;
        case 5:
            if (k == 5) {
                return FormulaResult{p2n(6, n) - BigInt(31) * p2n(4, n) + BigInt(30) * p2n(3, n) +
                                         BigInt(224) * p2n(2, n) - BigInt(480) * p2n(1, n) + 256,
                                     "eq5.10", "n>=1, k=5"};
            }
            if (k == 6) {
                return FormulaResult{BigInt(63) * p2n(5, n) - BigInt(93) * p2n(4, n) -
                                         BigInt(1650) * p2n(3, n) + BigInt(5040) * p2n(2, n) -
                                         BigInt(4128) * p2n(1, n) + 768,
                                     "eq5.11", "n>=1, k=6"};
            }
            return std::nullopt;
        case 6:
            if (k == 6) {
                return FormulaResult{p2n(7, n) - BigInt(63) * p2n(5, n) + BigInt(62) * p2n(4, n) +
                                         BigInt(1120) * p2n(3, n) - BigInt(2912) * p2n(2, n) +
                                         BigInt(1792) * p2n(1, n),
                                     "eq5.11", "n>=1, k=6"};
            }
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

FormulaResult gamma_fixture_small(int n, int k, int i) {
    check_nk(n, k);
    if (n > 3 || (i != 2 && i != 3)) {
        throw std::invalid_argument("gamma_fixture_small: defined for n in {1,2,3}, i in {2,3}");
    }
    static const char* kValidity =
        "n in {1,2,3}, k>=3 (enumeration shows the n=3 row fails for k<=2)";
    BigInt pk1 = pow2(static_cast<unsigned long>(k) + 1);
    if (i == 2) {
        BigInt v = n == 1 ? pk1 - 4 : n == 2 ? BigInt(3) * pk1 + 30 : BigInt(7) * pk1 + 266;
        return FormulaResult{v, "eq5.2", kValidity};
    }
    BigInt v = n == 1 ? BigInt(0) : n == 2 ? BigInt(21) * pk1 - 168 : BigInt(147) * pk1 + 1344;
    return FormulaResult{v, "eq5.3", kValidity};
}

BigInt total_count(int n, int k) {
    check_nk(n, k);
    return pow2(static_cast<unsigned long>(k + 1) * n);
}

BigInt r1_formula(int n, int k) {
    check_nk(n, k);
    return p2n(2, n) + pow2(static_cast<unsigned long>(k)) - 1;
}

BigInt r2_formula(int n, int k) {
    check_nk(n, k);
    BigInt pk = pow2(static_cast<unsigned long>(k));
    BigInt pkm1 = pow2(static_cast<unsigned long>(k) - 1);
    return pk * pk + BigInt(3) * (p2n(2, n) - 1) * pk + BigInt(6) * (p2n(1, n) - 1) * pkm1 +
           p2n(4, n) - BigInt(3) * p2n(2, n) - BigInt(6) * p2n(1, n) + 8;
}

BigInt rq_from_distribution(int q, int n, int k, const RankDistribution& dist) {
    check_nk(n, k);
    if (q < 1) throw std::invalid_argument("rq_from_distribution: need q >= 1");
    if (k > 2 * n) {
        throw std::invalid_argument("rq_from_distribution: identity requires k <= 2n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
    if (dist.n != n || dist.k != k || dist.gamma.size() != static_cast<std::size_t>(k) + 1) {
        throw std::invalid_argument("rq_from_distribution: distribution shape mismatch");
    }
    Dyadic sum;
    for (int i = 0; i <= k; ++i) {
        sum += Dyadic(dist.gamma[static_cast<std::size_t>(i)], -static_cast<long>(i) * q);
    }
    long scale = static_cast<long>(q) * (2 * n + k) - static_cast<long>(k + 1) * n;
    Dyadic r = sum.scaled_pow2(scale);
    if (!r.is_integer() || r.is_negative()) {
        throw NonIntegralError("rq_from_distribution: got non-count value " + r.to_string() +
                               " for q=" + std::to_string(q) + " n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + " (corrupted distribution)");
    }
    return r.to_integer();
}

Dyadic moment_rhs(int n, int k, int order) {
    check_nk(n, k);
    const long ln = n, lk = k;
    if (order == 1) {
        // 2^(n+k(n-1)) + 2^((k-1)n) - 2^((k-1)n-k)
        return Dyadic::pow2(ln + lk * (ln - 1)) + Dyadic::pow2((lk - 1) * ln) -
               Dyadic::pow2((lk - 1) * ln - lk);
    }
    if (order != 2) throw std::invalid_argument("moment_rhs: order must be 1 or 2");
    // 2^(n+k(n-2)) + (3*2^k - 3)*2^(-n+k(n-2)) + (6*2^(k-1) - 6)*2^(-2n+k(n-2))
    //   + 2^(-3n+kn) - 6*2^(n(k-3)-k) + 8*2^(-3n+k(n-2))
    BigInt pk = pow2(static_cast<unsigned long>(k));
    BigInt pkm1 = pow2(static_cast<unsigned long>(k) - 1);
    Dyadic out = Dyadic::pow2(ln + lk * (ln - 2));
    out += Dyadic(BigInt(3) * pk - 3, -ln + lk * (ln - 2));
    out += Dyadic(BigInt(6) * pkm1 - 6, -2 * ln + lk * (ln - 2));
    out += Dyadic::pow2(-3 * ln + lk * ln);
    out += Dyadic(BigInt(-6), ln * (lk - 3) - lk);
    out += Dyadic(BigInt(8), -3 * ln + lk * (ln - 2));
    return out;
}

std::array<BigInt, 3> rank_dist_n_by_2_formula(int n) {
    if (n < 1) throw std::invalid_argument("rank_dist_n_by_2_formula: need n >= 1");
    BigInt r1 = BigInt(3) * (p2n(2, n) - 1) + BigInt(6) * (p2n(1, n) - 1);
    BigInt r2 = p2n(4, n) - BigInt(3) * p2n(2, n) - BigInt(6) * p2n(1, n) + 8;
    return {BigInt(1), r1, r2};
}

}  // namespace persym
