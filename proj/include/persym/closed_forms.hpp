#pragma once

#include <array>
#include <optional>
#include <string>

#include "persym/bigint.hpp"
#include "persym/dyadic.hpp"
#include "persym/persym.hpp"

namespace persym {

// One evaluated catalog entry. `provenance` names the identity that produced
// the value (stable label, also used in reports); `validity` states the
// (n, k, i) range the identity is asserted for.
struct FormulaResult {
    BigInt value;
    std::string provenance;
    std::string validity;
};

// Closed form for gamma_i at (n, k) when the catalog states one, nullopt
// otherwise (e.g. i >= 4 with k >= 7). Ranges are encoded exactly as stated:
// out-of-range queries return nullopt instead of extrapolating.
//   i = 0           -> 1
//   i = 1           -> k = 1 table row, or eq2.5 for k >= 2
//   i = 2           -> k = 2 table row, or eq5.4 for k >= 3
//   i = 3           -> k = 3 table row, or eq5.7 for k >= 4
//   4 <= i <= k <= 6 -> the k = 4..6 table rows (lemma5.2, eq5.10, eq5.11)
// Requires n >= 1, k >= 1, 0 <= i <= k.
std::optional<FormulaResult> gamma_closed(int n, int k, int i);

// The small-n interpolation fixtures: gamma_2 (eq5.2) and gamma_3 (eq5.3)
// rows for n in {1,2,3}, as functions of k. The stated expressions are
// evaluated verbatim for any k >= 1; enumeration shows the n=3 rows are wrong
// for k <= 2 (e.g. eq5.2 gives 322 at n=3, k=2 where the true count is 490),
// so `validity` records k >= 3 and the verification suites only trust that
// range. Requires n in {1,2,3}, i in {2,3}.
FormulaResult gamma_fixture_small(int n, int k, int i);

// 2^((k+1)n), the seed-space size (eq2.4)
BigInt total_count(int n, int k);

// 2^(2n) + 2^k - 1, the q=1 solution count (eq2.3)
BigInt r1_formula(int n, int k);

// 2^(2k) + 3(2^(2n)-1)2^k + 6(2^n-1)2^(k-1) + 2^(4n) - 3*2^(2n) - 6*2^n + 8,
// the q=2 solution count (thm4.1 / eq4.1)
BigInt r2_formula(int n, int k);

// 2^(q(2n+k) - (k+1)n) * sum_i gamma_i 2^(-iq), computed exactly in dyadic
// arithmetic (eq2.1). Requires k <= 2n. Throws NonIntegralError if the result
// is not a non-negative integer, which signals a corrupted distribution.
BigInt rq_from_distribution(int q, int n, int k, const RankDistribution& dist);

// Right-hand sides of the first and second aggregate moment equations
// (eq5.1 rows 4 and 5). order must be 1 or 2.
Dyadic moment_rhs(int n, int k, int order);

// (r0, r1, r2) of eq3.4: (1, 3(2^(2n)-1) + 6(2^n-1), 2^(4n) - 3*2^(2n) - 6*2^n + 8)
std::array<BigInt, 3> rank_dist_n_by_2_formula(int n);

}  // namespace persym
