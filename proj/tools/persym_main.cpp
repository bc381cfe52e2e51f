// persym: exact rank-census tooling for stacked 2xk Hankel blocks over GF(2).
//
// Subcommands:
//   enumerate      exhaustive census of gamma_0..gamma_k for one (n, k)
//   rq             bilinear solution count R_q by oracle, closed form, or census
//   solve-moments  derive the census from the aggregate moment system
//   verify         run a named verification suite against the formula catalog
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/budget error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "persym/char_sums.hpp"
#include "persym/closed_forms.hpp"
#include "persym/errors.hpp"
#include "persym/moment_solver.hpp"
#include "persym/persym.hpp"
#include "persym/poly_systems.hpp"
#include "persym/verify.hpp"

namespace {

using nlohmann::json;
using namespace persym;

constexpr int kDefaultBudgetBits = 30;

json value_json(const BigInt& v) {
    // counts that fit a JSON number stay numbers; anything wider is emitted
    // as a decimal string so nothing is ever rounded
    return v.fits_uint64() ? json(v.to_uint64()) : json(v.to_string());
}

int budget_from(const CLI::Option* flag, int flag_value) {
    if (flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("PERSYM_BUDGET_BITS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable PERSYM_BUDGET_BITS='" << env << "'\n";
        }
    }
    return kDefaultBudgetBits;
}

void print_report_human(const VerificationReport& rep) {
    for (const auto& c : rep.checks) {
        if (!c.pass) {
            std::cout << "[FAIL] " << c.id << " (" << c.inputs << "): expected " << c.expected
                      << " [" << c.provenance << "], computed " << c.computed << "\n";
        }
    }
    std::cout << "suite " << rep.suite << ": " << rep.checks.size() << " checks, "
              << rep.failures() << " failures, " << rep.wall_seconds << " s: "
              << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
}

json report_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"id", c.id},
                          {"inputs", c.inputs},
                          {"expected", c.expected},
                          {"provenance", c.provenance},
                          {"computed", c.computed},
                          {"pass", c.pass}});
    }
    return json{{"suite", rep.suite},
                {"checks", checks},
                {"wall_seconds", rep.wall_seconds},
                {"status", rep.all_pass() ? "pass" : "fail"}};
}

int cmd_enumerate(int n, int k, unsigned threads, int budget, bool as_json, bool as_csv) {
    EnumerateOptions opt;
    opt.budget_bits = budget;
    opt.threads = threads;
    const long bits = static_cast<long>(k + 1) * n;
    if (bits <= 62 && bits <= budget) {
        if (bits > 25) {
            std::cerr << "warning: scanning 2^" << bits << " seeds, this can take a while\n";
        }
        if (bits > 22) {
            opt.progress = [](std::uint64_t done, std::uint64_t total) {
                std::cerr << "progress: " << done << "/" << total << " seeds ("
                          << (100 * done / total) << "%)\n";
            };
        }
    }
    RankDistribution d = enumerate_distribution(n, k, opt);
    if (as_json) {
        json gamma = json::array(), provenance = json::array();
        for (const auto& g : d.gamma) {
            gamma.push_back(value_json(g));
            provenance.push_back("enumeration");
        }
        std::cout << json{{"n", n}, {"k", k}, {"gamma", gamma}, {"provenance", provenance}}.dump()
                  << "\n";
    } else if (as_csv) {
        std::cout << "n,k,i,gamma_i,source\n";
        for (std::size_t i = 0; i < d.gamma.size(); ++i) {
            std::cout << n << "," << k << "," << i << "," << d.gamma[i].to_string()
                      << ",enumeration\n";
        }
    } else {
        for (std::size_t i = 0; i < d.gamma.size(); ++i) {
            std::cout << "gamma_" << i << " = " << d.gamma[i].to_string() << "\n";
        }
        std::cout << "sum = " << d.total().to_string() << " (2^" << bits << " = "
                  << total_count(n, k).to_string() << ")\n";
    }
    return 0;
}

int cmd_rq(int n, int k, int q, const std::string& mode, unsigned threads, int budget,
           bool as_json) {
    BigInt value;
    std::string provenance;
    if (mode == "brute") {
        value = BigInt(count_rq(n, k, q, threads));
        provenance = "oracle:eq2.2";
    } else if (mode == "formula") {
        if (q == 1) {
            value = r1_formula(n, k);
            provenance = "eq2.3";
        } else if (q == 2) {
            value = r2_formula(n, k);
            provenance = "eq4.1";
        } else {
            std::cerr << "error: no closed form for q=" << q << " (only q=1 and q=2)\n";
            return 2;
        }
    } else {  // moment
        if (k > 2 * n) {
            std::cerr << "error: the census identity requires k <= 2n (got n=" << n
                      << " k=" << k << ")\n";
            return 2;
        }
        EnumerateOptions opt;
        opt.budget_bits = budget;
        opt.threads = threads;
        value = rq_from_distribution(q, n, k, enumerate_distribution(n, k, opt));
        provenance = "eq2.1";
    }
    if (as_json) {
        std::cout << json{{"n", n},       {"k", k},
                          {"q", q},       {"mode", mode},
                          {"value", value_json(value)}, {"provenance", provenance}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "R_" << q << "(n=" << n << ", k=" << k << ") = " << value.to_string() << " ["
                  << provenance << "]\n";
    }
    return 0;
}

int cmd_solve_moments(int n, int k, bool postulates, unsigned threads, int budget, bool as_json) {
    SolvedDistribution solved = solve_moments(build_moment_system(n, k, postulates));

    const long bits = static_cast<long>(k + 1) * n;
    bool verified = false;
    if (bits <= budget && bits <= 62) {
        EnumerateOptions opt;
        opt.budget_bits = budget;
        opt.threads = threads;
        RankDistribution d = enumerate_distribution(n, k, opt);
        for (int i = 0; i <= k; ++i) {
            if (d.gamma[static_cast<std::size_t>(i)] !=
                solved.rows[static_cast<std::size_t>(i)].value) {
                std::cerr << "error: solver disagrees with enumeration at gamma_" << i << " ("
                          << solved.rows[static_cast<std::size_t>(i)].value.to_string() << " vs "
                          << d.gamma[static_cast<std::size_t>(i)].to_string() << ")\n";
                return 1;
            }
        }
        verified = true;
    }

    auto flag_of = [&](const SolvedRow& row) -> std::string {
        if (verified) return "enumeration-verified";
        return row.postulate_dependent ? "postulate-dependent" : "system-derived";
    };
    if (as_json) {
        json gamma = json::array(), provenance = json::array(), flags = json::array();
        for (const auto& row : solved.rows) {
            gamma.push_back(value_json(row.value));
            provenance.push_back(row.provenance);
            flags.push_back(flag_of(row));
        }
        std::cout << json{{"n", n},
                          {"k", k},
                          {"gamma", gamma},
                          {"provenance", provenance},
                          {"flags", flags}}
                         .dump()
                  << "\n";
    } else {
        for (std::size_t i = 0; i < solved.rows.size(); ++i) {
            const auto& row = solved.rows[i];
            std::cout << "gamma_" << i << " = " << row.value.to_string() << " [" << row.provenance
                      << ", " << flag_of(row) << "]\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, unsigned threads, int budget, bool as_json) {
    SuiteOptions opt;
    opt.threads = threads;
    opt.budget_bits = budget;
    VerificationReport rep = run_suite(suite, opt);
    if (as_json) {
        std::cout << report_json(rep).dump() << "\n";
    } else {
        print_report_human(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GF(2) rank-census enumeration and verification"};
    app.require_subcommand(1);

    int n = 1, k = 1, q = 1;
    unsigned threads = 0;
    int budget = kDefaultBudgetBits;
    bool as_json = false, as_csv = false, postulates = false;
    std::string mode = "brute", suite;

    auto add_common = [&](CLI::App* cmd, bool with_csv) {
        cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
        CLI::Option* b = cmd->add_option("--budget-bits", budget,
                                         "largest permitted seed-space size, as a bit count");
        CLI::Option* j = cmd->add_flag("--json", as_json, "machine-readable output");
        if (with_csv) cmd->add_flag("--csv", as_csv, "CSV output")->excludes(j);
        return b;
    };

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "exhaustive census of one (n, k)");
    cmd_enum->add_option("--n", n, "block count")->required();
    cmd_enum->add_option("--k", k, "column count")->required();
    CLI::Option* enum_budget = add_common(cmd_enum, true);

    CLI::App* cmd_r = app.add_subcommand("rq", "bilinear solution count R_q");
    cmd_r->add_option("--n", n, "block count")->required();
    cmd_r->add_option("--k", k, "column count")->required();
    cmd_r->add_option("--q", q, "number of Y unknowns")->required();
    cmd_r->add_option("--mode", mode, "brute | formula | moment")
        ->required()
        ->check(CLI::IsMember({"brute", "formula", "moment"}));
    CLI::Option* rq_budget = add_common(cmd_r, false);

    CLI::App* cmd_solve = app.add_subcommand("solve-moments", "derive the census from moments");
    cmd_solve->add_option("--n", n, "block count")->required();
    cmd_solve->add_option("--k", k, "column count")->required();
    cmd_solve->add_flag("--postulates", postulates,
                        "pin gamma_2/gamma_3 to their closed forms (needed for k >= 5)");
    CLI::Option* solve_budget = add_common(cmd_solve, false);

    CLI::App* cmd_v = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    cmd_v->add_option("--suite", suite, "one of: lemma52 lemma56 thm41 eq21 nby2 charsum moments fixtures all")
        ->required()
        ->check(CLI::IsMember(names));
    CLI::Option* verify_budget = add_common(cmd_v, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_enum->parsed()) {
            return cmd_enumerate(n, k, threads, budget_from(enum_budget, budget), as_json, as_csv);
        }
        if (cmd_r->parsed()) {
            return cmd_rq(n, k, q, mode, threads, budget_from(rq_budget, budget), as_json);
        }
        if (cmd_solve->parsed()) {
            return cmd_solve_moments(n, k, postulates, threads,
                                     budget_from(solve_budget, budget), as_json);
        }
        return cmd_verify(suite, threads, budget_from(verify_budget, budget), as_json);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnderdeterminedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: rerun with --postulates to pin gamma_2/gamma_3\n";
        return 2;
    } catch (const NonIntegralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
