#include "persym/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "persym/char_sums.hpp"
#include "persym/closed_forms.hpp"
#include "persym/moment_solver.hpp"
#include "persym/parallel.hpp"
#include "persym/persym.hpp"
#include "persym/poly_systems.hpp"

namespace persym {

namespace {

struct SuiteContext {
    SuiteOptions opt;
    std::map<std::pair<int, int>, RankDistribution> cache;

    const RankDistribution& dist(int n, int k) {
        auto key = std::make_pair(n, k);
        auto it = cache.find(key);
        if (it == cache.end()) {
            EnumerateOptions eopt;
            eopt.budget_bits = opt.budget_bits;
            eopt.threads = opt.threads;
            it = cache.emplace(key, enumerate_distribution(n, k, eopt)).first;
        }
        return it->second;
    }
};

void check_eq(VerificationReport& rep, std::string id, std::string inputs, const BigInt& expected,
              std::string provenance, const BigInt& computed) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.inputs = std::move(inputs);
    rec.expected = expected.to_string();
    rec.provenance = std::move(provenance);
    rec.computed = computed.to_string();
    rec.pass = expected == computed;
    rep.checks.push_back(std::move(rec));
}

void check_true(VerificationReport& rep, std::string id, std::string inputs,
                std::string expected, std::string provenance, std::string computed, bool pass) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.inputs = std::move(inputs);
    rec.expected = std::move(expected);
    rec.provenance = std::move(provenance);
    rec.computed = std::move(computed);
    rec.pass = pass;
    rep.checks.push_back(std::move(rec));
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

// ---- suite: lemma52 (tables k = 1..4) --------------------------------------

void suite_lemma52(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 4; ++k) {
            if ((k + 1) * n > 30) continue;  // grid bound, independent of the runtime budget
            const RankDistribution& d = ctx.dist(n, k);
            for (int i = 0; i <= k; ++i) {
                auto closed = gamma_closed(n, k, i);
                check_eq(rep,
                         "lemma52/n" + std::to_string(n) + "k" + std::to_string(k) + "/gamma" +
                             std::to_string(i),
                         nk(n, k) + " i=" + std::to_string(i), closed->value, closed->provenance,
                         d.gamma[static_cast<std::size_t>(i)]);
            }
            check_eq(rep, "lemma52/n" + std::to_string(n) + "k" + std::to_string(k) + "/total",
                     nk(n, k), total_count(n, k), "eq2.4", d.total());
        }
    }
}

// ---- suite: lemma56 (tables k = 5, 6) --------------------------------------

void suite_lemma56(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 5; k <= 6; ++k) {
            const RankDistribution& d = ctx.dist(n, k);
            for (int i = 0; i <= k; ++i) {
                auto closed = gamma_closed(n, k, i);
                check_eq(rep,
                         "lemma56/n" + std::to_string(n) + "k" + std::to_string(k) + "/gamma" +
                             std::to_string(i),
                         nk(n, k) + " i=" + std::to_string(i), closed->value, closed->provenance,
                         d.gamma[static_cast<std::size_t>(i)]);
            }
        }
    }
    // the worked (n, k) = (3, 6) census, pinned as literal values
    static const std::uint64_t kFinal[7] = {1, 21, 1162, 20160, 258720, 1128960, 688128};
    const RankDistribution& d = ctx.dist(3, 6);
    for (int i = 0; i <= 6; ++i) {
        check_eq(rep, "lemma56/n3k6/final-example/gamma" + std::to_string(i),
                 "n=3 k=6 i=" + std::to_string(i), BigInt(kFinal[i]), "worked-example",
                 d.gamma[static_cast<std::size_t>(i)]);
    }
}

// ---- suite: thm41 (q = 2 count and its case decomposition) ------------------

void suite_thm41(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            check_eq(rep, "thm41/n" + std::to_string(n) + "k" + std::to_string(k) + "/r2",
                     nk(n, k), r2_formula(n, k), "eq4.1",
                     BigInt(count_rq(n, k, 2, ctx.opt.threads)));

            R2Decomposition dec = r2_case_decomposition(n, k, ctx.opt.threads);
            const BigInt p2k = pow2(static_cast<unsigned long>(2 * k));
            const BigInt col = (pow2(2ul * static_cast<unsigned long>(n)) - 1) *
                               pow2(static_cast<unsigned long>(k));
            const BigInt six = BigInt(6) * (pow2(static_cast<unsigned long>(n)) - 1) *
                               pow2(static_cast<unsigned long>(k) - 1);
            auto r2count = rank_dist_n_by_2_formula(n)[2];
            const BigInt want_solutions[6] = {p2k, col, col, col, six, r2count};
            const char* prov_solutions[6] = {"eq4.2", "eq4.3", "eq4.4", "eq4.5", "eq4.8", "eq4.10"};
            const BigInt one_col = pow2(2ul * static_cast<unsigned long>(n)) - 1;
            const BigInt want_members[6] = {BigInt(1),
                                            one_col,
                                            one_col,
                                            one_col,
                                            BigInt(6) * (pow2(static_cast<unsigned long>(n)) - 1),
                                            r2count};
            const char* prov_members[6] = {"eq2.4", "eq3.1", "eq3.1", "eq3.1", "eq3.3", "eq3.4"};
            for (int c = 0; c < 6; ++c) {
                std::string base =
                    "thm41/n" + std::to_string(n) + "k" + std::to_string(k) + "/case" +
                    std::to_string(c);
                check_eq(rep, base + "/solutions", nk(n, k) + " class=" + std::to_string(c),
                         want_solutions[c], prov_solutions[c],
                         BigInt(dec.solutions[static_cast<std::size_t>(c)]));
                check_eq(rep, base + "/members", nk(n, k) + " class=" + std::to_string(c),
                         want_members[c], prov_members[c],
                         BigInt(dec.members[static_cast<std::size_t>(c)]));
            }
        }
    }
}

// ---- suite: eq21 (moment identity against the brute-force counts) ----------

void suite_eq21(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 4; ++n) {
        int kmax = std::min(2 * n, 6);
        for (int k = 1; k <= kmax; ++k) {
            const RankDistribution& d = ctx.dist(n, k);
            for (int q = 1; q <= 3; ++q) {
                if (2 * n * q > 26) continue;
                BigInt via_gamma = rq_from_distribution(q, n, k, d);
                BigInt brute = BigInt(count_rq(n, k, q, ctx.opt.threads));
                check_eq(rep,
                         "eq21/n" + std::to_string(n) + "k" + std::to_string(k) + "q" +
                             std::to_string(q) + "/brute-vs-gamma",
                         nk(n, k) + " q=" + std::to_string(q), brute, "eq2.1", via_gamma);
                if (q == 1) {
                    check_eq(rep,
                             "eq21/n" + std::to_string(n) + "k" + std::to_string(k) +
                                 "q1/closed-form",
                             nk(n, k) + " q=1", r1_formula(n, k), "eq2.3", via_gamma);
                }
                if (q == 2) {
                    check_eq(rep,
                             "eq21/n" + std::to_string(n) + "k" + std::to_string(k) +
                                 "q2/closed-form",
                             nk(n, k) + " q=2", r2_formula(n, k), "eq4.11", via_gamma);
                }
            }
        }
    }
}

// ---- suite: nby2 (two-column census and the six couples) -------------------

void suite_nby2(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 7; ++n) {
        auto census = census_n_by_2(n, ctx.opt.threads);
        auto formula = rank_dist_n_by_2_formula(n);
        for (int i = 0; i < 3; ++i) {
            check_eq(rep, "nby2/n" + std::to_string(n) + "/r" + std::to_string(i),
                     "n=" + std::to_string(n) + " i=" + std::to_string(i),
                     formula[static_cast<std::size_t>(i)], "eq3.4",
                     BigInt(census[static_cast<std::size_t>(i)]));
        }
        const BigInt want = pow2(static_cast<unsigned long>(n)) - 1;
        const auto& couples = special_couples();
        for (std::size_t c = 0; c < couples.size(); ++c) {
            std::uint64_t got =
                count_special_pairs(n, couples[c][0], couples[c][1], ctx.opt.threads);
            check_eq(rep, "nby2/n" + std::to_string(n) + "/couple" + std::to_string(c),
                     "n=" + std::to_string(n) + " couple=" + std::to_string(c), want, "eq3.3",
                     BigInt(got));
        }
    }
}

// ---- suite: charsum (f_k = 2^(2n+k-rank)) -----------------------------------

std::uint64_t charsum_mismatches_exhaustive(int n, int k, unsigned threads) {
    const std::uint64_t total = std::uint64_t{1} << (n * (k + 1));
    auto locals = detail::for_each_range<std::uint64_t>(
        total, threads, [n, k](std::uint64_t begin, std::uint64_t end, std::uint64_t& bad) {
            for (std::uint64_t bits = begin; bits < end; ++bits) {
                Seed s{n, k, bits};
                std::uint64_t want = std::uint64_t{1} << (2 * n + k - rank_of_seed(s));
                if (f_k_eval(tails_from_seed(s), k) != want) ++bad;
            }
        });
    std::uint64_t bad = 0;
    for (std::uint64_t l : locals) bad += l;
    return bad;
}

void suite_charsum(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; n * (k + 1) <= 16; ++k) {
            std::uint64_t bad = charsum_mismatches_exhaustive(n, k, ctx.opt.threads);
            check_eq(rep, "charsum/exhaustive/n" + std::to_string(n) + "k" + std::to_string(k),
                     nk(n, k) + " seeds=2^" + std::to_string(n * (k + 1)), BigInt(0),
                     "f_k=2^(2n+k-rank)", BigInt(bad));
        }
    }
    const std::pair<int, int> random_grid[3] = {{2, 4}, {3, 3}, {3, 4}};
    std::mt19937_64 rng(0x70657273796dULL);
    for (auto [n, k] : random_grid) {
        const std::uint64_t mask = (std::uint64_t{1} << (n * (k + 1))) - 1;
        std::uint64_t bad = 0;
        for (int trial = 0; trial < 10'000; ++trial) {
            Seed s{n, k, rng() & mask};
            std::uint64_t want = std::uint64_t{1} << (2 * n + k - rank_of_seed(s));
            if (f_k_eval(tails_from_seed(s), k) != want) ++bad;
        }
        check_eq(rep, "charsum/random/n" + std::to_string(n) + "k" + std::to_string(k),
                 nk(n, k) + " trials=10000", BigInt(0), "f_k=2^(2n+k-rank)", BigInt(bad));
    }
}

// ---- suite: moments (solver pipeline and interpolated coefficients) --------

void suite_moments(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 6; ++k) {
            if ((k + 1) * n > 22) continue;  // keeps this suite inside seconds
            const RankDistribution& d = ctx.dist(n, k);
            SolvedDistribution solved = solve_moments(build_moment_system(n, k, k >= 5));
            bool match = true;
            for (int i = 0; i <= k; ++i) {
                match = match &&
                        solved.rows[static_cast<std::size_t>(i)].value ==
                            d.gamma[static_cast<std::size_t>(i)];
            }
            std::string want, got;
            for (int i = 0; i <= k; ++i) {
                want += (i ? "," : "") + d.gamma[static_cast<std::size_t>(i)].to_string();
                got += (i ? "," : "") + solved.rows[static_cast<std::size_t>(i)].value.to_string();
            }
            check_true(rep, "moments/solve/n" + std::to_string(n) + "k" + std::to_string(k),
                       nk(n, k), want, "eq5.1", got, match);

            if (k <= 2 * n) {
                // the enumerated census satisfies every aggregate equation exactly
                Dyadic m1, m2;
                for (int i = 0; i <= k; ++i) {
                    m1 += Dyadic(d.gamma[static_cast<std::size_t>(i)], -i);
                    m2 += Dyadic(d.gamma[static_cast<std::size_t>(i)], -2L * i);
                }
                bool ok = d.total() == total_count(n, k) && m1 == moment_rhs(n, k, 1) &&
                          m2 == moment_rhs(n, k, 2) && d.gamma[0] == BigInt(1) &&
                          (k < 2 ||
                           d.gamma[1] == BigInt(3) * (pow2(static_cast<unsigned long>(n)) - 1));
                check_true(rep, "moments/system/n" + std::to_string(n) + "k" + std::to_string(k),
                           nk(n, k), "all five aggregate equations hold", "eq5.1",
                           ok ? "all hold" : "violated", ok);
            }
        }
    }
    for (int k = 3; k <= 16; ++k) {
        auto fit = fit_ansatz_coefficients(AnsatzTarget::gamma2, k);
        BigInt pk1 = pow2(static_cast<unsigned long>(k) + 1);
        bool ok = fit.size() == 2 && fit[0] == pk1 - 25 && fit[1] == BigInt(18) - pk1;
        check_true(rep, "moments/ansatz-gamma2/k" + std::to_string(k), "k=" + std::to_string(k),
                   "(" + (pk1 - 25).to_string() + "," + (BigInt(18) - pk1).to_string() + ")",
                   "eq5.6->eq5.4", "(" + fit[0].to_string() + "," + fit[1].to_string() + ")", ok);
    }
    for (int k = 4; k <= 16; ++k) {
        auto fit = fit_ansatz_coefficients(AnsatzTarget::gamma3, k);
        BigInt pk = pow2(static_cast<unsigned long>(k));
        BigInt wa = BigInt(7) * pk - 133;
        BigInt wb = BigInt(294) - BigInt(21) * pk;
        BigInt wc = BigInt(14) * pk - 176;
        bool ok = fit.size() == 3 && fit[0] == wa && fit[1] == wb && fit[2] == wc;
        check_true(rep, "moments/ansatz-gamma3/k" + std::to_string(k), "k=" + std::to_string(k),
                   "(" + wa.to_string() + "," + wb.to_string() + "," + wc.to_string() + ")",
                   "eq5.9->eq5.7",
                   "(" + fit[0].to_string() + "," + fit[1].to_string() + "," + fit[2].to_string() +
                       ")",
                   ok);
    }
}

// ---- suite: fixtures (eq5.2 / eq5.3 rows and their validity bound) ----------

void suite_fixtures(SuiteContext& ctx, VerificationReport& rep) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 3; k <= 6; ++k) {
            const RankDistribution& d = ctx.dist(n, k);
            for (int i = 2; i <= 3; ++i) {
                FormulaResult f = gamma_fixture_small(n, k, i);
                check_eq(rep,
                         "fixtures/n" + std::to_string(n) + "k" + std::to_string(k) + "/gamma" +
                             std::to_string(i),
                         nk(n, k) + " i=" + std::to_string(i), f.value, f.provenance,
                         d.gamma[static_cast<std::size_t>(i)]);
            }
        }
    }
    // validity boundary: at (n, k) = (3, 2) the census follows the k=2 table
    // row (490), not the eq5.2 expression (322) -- that divergence is what
    // pins the fixtures to k >= 3
    const RankDistribution& d32 = ctx.dist(3, 2);
    check_eq(rep, "fixtures/validity-pin/n3k2/census", "n=3 k=2 i=2",
             gamma_closed(3, 2, 2)->value, "lemma5.2:k2", d32.gamma[2]);
    BigInt fixture_value = gamma_fixture_small(3, 2, 2).value;
    check_true(rep, "fixtures/validity-pin/n3k2/divergence", "n=3 k=2 i=2",
               "eq5.2 (=" + fixture_value.to_string() + ") != census (=" +
                   d32.gamma[2].to_string() + ")",
               "eq5.2", fixture_value == d32.gamma[2] ? "values agree" : "values differ",
               fixture_value != d32.gamma[2]);
}

using SuiteFn = std::function<void(SuiteContext&, VerificationReport&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
        {"lemma52", suite_lemma52}, {"lemma56", suite_lemma56}, {"thm41", suite_thm41},
        {"eq21", suite_eq21},       {"nby2", suite_nby2},       {"charsum", suite_charsum},
        {"moments", suite_moments}, {"fixtures", suite_fixtures},
    };
    return kSuites;
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::size_t VerificationReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += !c.pass;
    return f;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> names;
        for (const auto& [name, fn] : suite_table()) names.push_back(name);
        return names;
    }();
    return kNames;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = name;
    SuiteContext ctx{opt, {}};
    auto start = std::chrono::steady_clock::now();
    bool found = false;
    for (const auto& [suite, fn] : suite_table()) {
        if (name == "all" || name == suite) {
            fn(ctx, rep);
            found = true;
        }
    }
    if (!found) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport run_postulate_stress(const SuiteOptions& opt) {
    VerificationReport rep;
    rep.suite = "postulate-stress";
    SuiteContext ctx{opt, {}};
    auto start = std::chrono::steady_clock::now();
    for (int n : {4, 5}) {
        const RankDistribution& d = ctx.dist(n, 5);
        for (int i = 0; i <= 5; ++i) {
            auto closed = gamma_closed(n, 5, i);
            check_eq(rep,
                     "stress/n" + std::to_string(n) + "k5/gamma" + std::to_string(i),
                     nk(n, 5) + " i=" + std::to_string(i), closed->value, closed->provenance,
                     d.gamma[static_cast<std::size_t>(i)]);
        }
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace persym
