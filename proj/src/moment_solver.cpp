#include "persym/moment_solver.hpp"

#include <stdexcept>

#include "persym/closed_forms.hpp"
#include "persym/errors.hpp"

namespace persym {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    auto d = num.divmod(den);
    if (!d.rem.is_zero()) {
        throw NonIntegralError(std::string(what) + ": " + num.to_string() + " is not divisible by " +
                               den.to_string());
    }
    return d.quot;
}

}  // namespace

RankDistribution SolvedDistribution::to_distribution() const {
    RankDistribution d;
    d.n = n;
    d.k = k;
    d.gamma.reserve(rows.size());
    for (const auto& r : rows) d.gamma.push_back(r.value);
    return d;
}

MomentSystem build_moment_system(int n, int k, bool with_postulates) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("moment system: need n >= 1 and k >= 1");
    }
    MomentSystem sys;
    sys.n = n;
    sys.k = k;
    auto g0 = gamma_closed(n, k, 0);
    sys.knowns[0] = {g0->value, g0->provenance};
    if (k >= 2) {
        auto g1 = gamma_closed(n, k, 1);
        sys.knowns[1] = {g1->value, g1->provenance};
    }
    if (with_postulates && k >= 3) {
        auto g2 = gamma_closed(n, k, 2);  // eq5.4 for every k >= 3
        sys.knowns[2] = {g2->value, g2->provenance};
        sys.postulates_used = true;
    }
    if (with_postulates && k >= 4) {
        auto g3 = gamma_closed(n, k, 3);  // eq5.7 for every k >= 4
        sys.knowns[3] = {g3->value, g3->provenance};
        sys.postulates_used = true;
    }
    return sys;
}

SolvedDistribution solve_moments(const MomentSystem& sys) {
    const int n = sys.n, k = sys.k;
    std::vector<int> unknowns;
    for (int i = 0; i <= k; ++i) {
        if (!sys.knowns.count(i)) unknowns.push_back(i);
    }
    const std::size_t u = unknowns.size();
    if (u > 3) {
        throw UnderdeterminedError(
            "moment system for n=" + std::to_string(n) + " k=" + std::to_string(k) + " has " +
            std::to_string(u) + " unknowns > 3 equations" +
            (sys.postulates_used ? "" : " (gamma_2/gamma_3 postulates required for k >= 5)"));
    }

    // row r (r = 0, 1, 2) is sum_i gamma_i 2^(-ir) = rhs_r, scaled by 2^(rk)
    // so every coefficient 2^(r(k-i)) is an integer
    Dyadic rhs_dyadic[3] = {Dyadic(total_count(n, k)), moment_rhs(n, k, 1), moment_rhs(n, k, 2)};
    BigInt a[3][3];
    BigInt b[3];
    for (int r = 0; r < 3; ++r) {
        Dyadic adjusted = rhs_dyadic[r];
        for (const auto& [i, known] : sys.knowns) {
            adjusted -= Dyadic(known.first, -static_cast<long>(i) * r);
        }
        Dyadic scaled = adjusted.scaled_pow2(static_cast<long>(r) * k);
        if (!scaled.is_integer()) {
            throw NonIntegralError("moment system row " + std::to_string(r) +
                                   " is not integral after scaling: " + scaled.to_string());
        }
        b[r] = scaled.to_integer();
        for (std::size_t j = 0; j < u; ++j) {
            a[r][j] = pow2(static_cast<unsigned long>(r) * (k - unknowns[j]));
        }
    }

    // Cramer on the leading u x u block; it is a scaled Vandermonde in the
    // distinct weights 2^(-i), hence nonsingular
    std::vector<BigInt> x(u);
    if (u == 1) {
        x[0] = exact_div(b[0], a[0][0], "moment solve");
    } else if (u == 2) {
        BigInt det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        x[0] = exact_div(b[0] * a[1][1] - a[0][1] * b[1], det, "moment solve");
        x[1] = exact_div(a[0][0] * b[1] - b[0] * a[1][0], det, "moment solve");
    } else if (u == 3) {
        auto det3 = [](const BigInt m[3][3]) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        BigInt det = det3(a);
        for (std::size_t j = 0; j < 3; ++j) {
            BigInt m[3][3];
            for (int r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 3; ++c) m[r][c] = c == j ? b[r] : a[r][c];
            }
            x[j] = exact_div(det3(m), det, "moment solve");
        }
    }

    for (std::size_t j = 0; j < u; ++j) {
        if (x[j].is_negative()) {
            throw NonIntegralError("moment solve: gamma_" + std::to_string(unknowns[j]) +
                                   " came out negative (" + x[j].to_string() +
                                   "), inconsistent knowns");
        }
    }
    // the rows not used by the square solve must hold as well
    for (std::size_t r = u; r < 3; ++r) {
        BigInt lhs;
        for (std::size_t j = 0; j < u; ++j) lhs += a[r][j] * x[j];
        if (lhs != b[r]) {
            throw NonIntegralError("moment solve: equation " + std::to_string(r) +
                                   " violated by the solution, inconsistent knowns");
        }
    }

    SolvedDistribution out;
    out.n = n;
    out.k = k;
    out.rows.resize(static_cast<std::size_t>(k) + 1);
    for (const auto& [i, known] : sys.knowns) {
        auto& row = out.rows[static_cast<std::size_t>(i)];
        row.value = known.first;
        row.provenance = known.second;
        row.postulate_dependent = (i == 2 || i == 3) && sys.postulates_used;
    }
    for (std::size_t j = 0; j < u; ++j) {
        auto& row = out.rows[static_cast<std::size_t>(unknowns[j])];
        row.value = x[j];
        row.provenance = "moment-system";
        row.postulate_dependent = sys.postulates_used;
    }
    return out;
}

std::vector<BigInt> fit_ansatz_coefficients(AnsatzTarget target, int k) {
    if (target == AnsatzTarget::gamma2) {
        if (k < 3) throw std::invalid_argument("gamma2 ansatz: stated for k >= 3");
        // rows n = 1..3 of: a*2^n + b = fixture(n) - 7*2^(2n)
        BigInt rhs[3];
        for (int n = 1; n <= 3; ++n) {
            rhs[n - 1] = gamma_fixture_small(n, k, 2).value -
                         BigInt(7) * pow2(2ul * static_cast<unsigned long>(n));
        }
        BigInt a = exact_div(rhs[1] - rhs[0], BigInt(2), "gamma2 ansatz");
        BigInt b = rhs[0] - BigInt(2) * a;
        if (BigInt(8) * a + b != rhs[2]) {
            throw NonIntegralError("gamma2 ansatz: n=3 fixture row inconsistent with the fit");
        }
        return {a, b};
    }
    if (k < 4) throw std::invalid_argument("gamma3 ansatz: stated for k >= 4");
    // rows n = 1..3 of: a*2^(2n) + b*2^n + c = fixture(n) - 15*2^(3n)
    BigInt rhs[3];
    for (int n = 1; n <= 3; ++n) {
        rhs[n - 1] = gamma_fixture_small(n, k, 3).value -
                     BigInt(15) * pow2(3ul * static_cast<unsigned long>(n));
    }
    // eliminate c, then b: rows are [4 2 1], [16 4 1], [64 8 1]
    BigInt d1 = rhs[1] - rhs[0];  // 12a + 2b
    BigInt d2 = rhs[2] - rhs[1];  // 48a + 4b
    BigInt a = exact_div(d2 - BigInt(2) * d1, BigInt(24), "gamma3 ansatz");
    BigInt b = exact_div(d1 - BigInt(12) * a, BigInt(2), "gamma3 ansatz");
    BigInt c = rhs[0] - BigInt(4) * a - BigInt(2) * b;
    return {a, b, c};
}

}  // namespace persym
