#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persym/closed_forms.hpp"
#include "persym/errors.hpp"
#include "persym/moment_solver.hpp"
#include "persym/persym.hpp"

using namespace persym;

TEST_CASE("k=1 solves to the two-entry table") {
    for (int n = 1; n <= 6; ++n) {
        SolvedDistribution s = solve_moments(build_moment_system(n, 1, false));
        REQUIRE(s.rows.size() == 2);
        CHECK(s.rows[0].value == BigInt(1));
        CHECK(s.rows[1].value == pow2(2ul * static_cast<unsigned long>(n)) - 1);
        CHECK_FALSE(s.rows[1].postulate_dependent);
    }
}

TEST_CASE("k=2 recovers gamma_2 = 2^(3n) - 3*2^n + 2") {
    for (int n = 1; n <= 6; ++n) {
        SolvedDistribution s = solve_moments(build_moment_system(n, 2, false));
        BigInt want = pow2(3ul * static_cast<unsigned long>(n)) -
                      BigInt(3) * pow2(static_cast<unsigned long>(n)) + 2;
        CHECK(s.rows[2].value == want);
        CHECK(s.rows[2].provenance == "moment-system");
    }
}

TEST_CASE("k=3 and k=4 reproduce the table rows") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 3; k <= 4; ++k) {
            SolvedDistribution s = solve_moments(build_moment_system(n, k, false));
            for (int i = 0; i <= k; ++i) {
                CHECK(s.rows[static_cast<std::size_t>(i)].value == gamma_closed(n, k, i)->value);
            }
        }
    }
}

TEST_CASE("k=5 and k=6 need the postulates and reproduce the tables") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 5; k <= 6; ++k) {
            CHECK_THROWS_AS(solve_moments(build_moment_system(n, k, false)),
                            UnderdeterminedError);
            SolvedDistribution s = solve_moments(build_moment_system(n, k, true));
            for (int i = 0; i <= k; ++i) {
                CHECK(s.rows[static_cast<std::size_t>(i)].value == gamma_closed(n, k, i)->value);
                if (i >= 2) CHECK(s.rows[static_cast<std::size_t>(i)].postulate_dependent);
            }
        }
    }
    // the worked (3, 6) vector again, through the solver this time
    SolvedDistribution s36 = solve_moments(build_moment_system(3, 6, true));
    const std::uint64_t want[7] = {1, 21, 1162, 20160, 258720, 1128960, 688128};
    for (int i = 0; i <= 6; ++i) {
        CHECK(s36.rows[static_cast<std::size_t>(i)].value == BigInt(want[i]));
    }
}

TEST_CASE("k=7 is underdetermined even with postulates") {
    CHECK_THROWS_AS(solve_moments(build_moment_system(2, 7, true)), UnderdeterminedError);
}

TEST_CASE("solver output equals enumeration on the in-budget grid") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 6; ++k) {
            if ((k + 1) * n > 20) continue;
            RankDistribution d = enumerate_distribution(n, k);
            SolvedDistribution s = solve_moments(build_moment_system(n, k, k >= 5));
            for (int i = 0; i <= k; ++i) {
                CHECK(s.rows[static_cast<std::size_t>(i)].value ==
                      d.gamma[static_cast<std::size_t>(i)]);
            }
        }
    }
}

TEST_CASE("a corrupted postulate is rejected, not absorbed") {
    // two unknowns leave a spare equation, which the corruption violates
    MomentSystem sys = build_moment_system(2, 5, true);
    sys.knowns[2].first += 1;
    CHECK_THROWS_AS(solve_moments(sys), NonIntegralError);

    // with three unknowns the square system still solves, but at n=1 the true
    // high ranks are zero, so the shifted solution turns negative
    MomentSystem sys2 = build_moment_system(1, 6, true);
    sys2.knowns[3].first += 2;
    CHECK_THROWS_AS(solve_moments(sys2), NonIntegralError);

    // corrupting a known in a 1-unknown system must trip the extra equations
    MomentSystem sys3 = build_moment_system(2, 2, false);
    sys3.knowns[1].first += 1;
    CHECK_THROWS_AS(solve_moments(sys3), NonIntegralError);
}

TEST_CASE("fit_ansatz_coefficients pinned values") {
    auto g2k3 = fit_ansatz_coefficients(AnsatzTarget::gamma2, 3);
    CHECK(g2k3 == std::vector<BigInt>{BigInt(-9), BigInt(2)});

    auto g2k4 = fit_ansatz_coefficients(AnsatzTarget::gamma2, 4);
    CHECK(g2k4 == std::vector<BigInt>{BigInt(7), BigInt(-14)});

    auto g3k4 = fit_ansatz_coefficients(AnsatzTarget::gamma3, 4);
    CHECK(g3k4 == std::vector<BigInt>{BigInt(-21), BigInt(-42), BigInt(48)});

    CHECK_THROWS_AS(fit_ansatz_coefficients(AnsatzTarget::gamma2, 2), std::invalid_argument);
    CHECK_THROWS_AS(fit_ansatz_coefficients(AnsatzTarget::gamma3, 3), std::invalid_argument);
}

TEST_CASE("fitted coefficients match the closed forms up to k=16") {
    for (int k = 3; k <= 16; ++k) {
        auto fit = fit_ansatz_coefficients(AnsatzTarget::gamma2, k);
        BigInt pk1 = pow2(static_cast<unsigned long>(k) + 1);
        CHECK(fit[0] == pk1 - 25);
        CHECK(fit[1] == BigInt(18) - pk1);
        // and the reassembled ansatz equals the catalog value at several n
        for (int n = 1; n <= 6; ++n) {
            BigInt assembled = BigInt(7) * pow2(2ul * static_cast<unsigned long>(n)) +
                               fit[0] * pow2(static_cast<unsigned long>(n)) + fit[1];
            CHECK(assembled == gamma_closed(n, k, 2)->value);
        }
    }
    for (int k = 4; k <= 16; ++k) {
        auto fit = fit_ansatz_coefficients(AnsatzTarget::gamma3, k);
        BigInt pk = pow2(static_cast<unsigned long>(k));
        CHECK(fit[0] == BigInt(7) * pk - 133);
        CHECK(fit[1] == BigInt(294) - BigInt(21) * pk);
        CHECK(fit[2] == BigInt(14) * pk - 176);
        for (int n = 1; n <= 6; ++n) {
            BigInt assembled = BigInt(15) * pow2(3ul * static_cast<unsigned long>(n)) +
                               fit[0] * pow2(2ul * static_cast<unsigned long>(n)) +
                               fit[1] * pow2(static_cast<unsigned long>(n)) + fit[2];
            CHECK(assembled == gamma_closed(n, k, 3)->value);
        }
    }
}
