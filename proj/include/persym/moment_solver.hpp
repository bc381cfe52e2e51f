#pragma once

#include <map>
#include <string>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/dyadic.hpp"
#include "persym/persym.hpp"

namespace persym {

// The aggregate linear system tying the census to its first two moments:
// three equations (total count eq2.4, first moment eq2.3, second moment
// eq4.11, the eq5.1 packaging) in the gamma_i, with some gamma_i pinned as
// knowns. At most three indices can be left unknown.
struct MomentSystem {
    int n = 1;
    int k = 1;
    bool postulates_used = false;
    // index -> (value, provenance label)
    std::map<int, std::pair<BigInt, std::string>> knowns;
};

// Standard known set: gamma_0 = 1 always, gamma_1 = 3(2^n - 1) for k >= 2,
// plus the eq5.4 / eq5.7 closed forms for gamma_2 / gamma_3 when
// with_postulates is set (k >= 5 cannot be solved without them).
MomentSystem build_moment_system(int n, int k, bool with_postulates);

struct SolvedRow {
    BigInt value;
    std::string provenance;       // label of the known, or "moment-system" if solved here
    bool postulate_dependent = false;
};

struct SolvedDistribution {
    int n = 0;
    int k = 0;
    std::vector<SolvedRow> rows;

    RankDistribution to_distribution() const;
};

// Exact solve via elimination of the scaled integer system (rows scaled by
// 2^(rk) so every intermediate stays an integer). Throws
// UnderdeterminedError when unknowns exceed the three equations and
// NonIntegralError when the solution is fractional, negative, or fails the
// unused equations -- the signal that a postulate or known is inconsistent.
SolvedDistribution solve_moments(const MomentSystem& sys);

enum class AnsatzTarget { gamma2, gamma3 };

// Re-derives the interpolated coefficients behind the gamma_2 / gamma_3
// closed forms: fits
//   gamma2: 7*2^(2n) + a*2^n + b             (k >= 3)
//   gamma3: 15*2^(3n) + a*2^(2n) + b*2^n + c (k >= 4)
// through the n = 1, 2, 3 fixture rows (eq5.6 / eq5.9) and returns (a, b)
// or (a, b, c).
std::vector<BigInt> fit_ansatz_coefficients(AnsatzTarget target, int k);

}  // namespace persym
