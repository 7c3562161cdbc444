// menage: exact counts for the menage problem and its domino/permutation
// relatives, plus built-in verification against exhaustive oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "menage/menage.hpp"

namespace {

// Any invariant check that comes out false; mapped to exit code 1.
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_starts(const std::vector<unsigned long>& starts) {
    std::string line = "[";
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += std::to_string(starts[i]);
    }
    line += ']';
    return line;
}

void run_count(const std::string& kind, unsigned long n_or_m, bool have_r, unsigned long r) {
    if (kind == "dominos") {
        if (!have_r) {
            throw std::domain_error("count dominos requires both the cycle length m and the domino count r");
        }
        std::cout << menage::to_decimal(menage::domino_count(n_or_m, r)) << "\n";
        return;
    }
    if (have_r) {
        throw std::domain_error("count " + kind + " takes a single argument n");
    }
    menage::ExactInteger tait = menage::tait_count_incremental(n_or_m);
    if (kind == "tait") {
        std::cout << menage::to_decimal(tait) << "\n";
    } else {
        menage::ExactInteger seatings =
            menage::ExactInteger(2) * menage::factorial(n_or_m) * tait;
        std::cout << menage::to_decimal(seatings) << "\n";
    }
}

void run_table(unsigned long from, unsigned long to, const std::string& format,
               bool include_terms) {
    if (format == "csv" && include_terms) {
        throw std::domain_error("csv has no representation for the terms decomposition; use json or text");
    }
    std::vector<menage::output::OutputRecord> records =
        menage::output::build_table(from, to, include_terms);
    if (format == "csv") {
        std::cout << menage::output::render_csv(records);
    } else if (format == "json") {
        std::cout << menage::output::render_json(records);
    } else {
        std::cout << menage::output::render_text(records);
    }
}

void print_suite(const std::string& label, const menage::verify::SuiteReport& report,
                 std::size_t& passed, std::size_t& total) {
    for (const std::string& w : report.warnings) {
        std::cerr << w << "\n";
    }
    std::cout << "[" << label << "]\n";
    for (const menage::verify::Check& c : report.checks) {
        ++total;
        if (c.passed) {
            ++passed;
            std::cout << "PASS " << c.name << "\n";
        } else {
            std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
}

void run_verify(unsigned long max_n, const std::string& suite) {
    std::size_t passed = 0;
    std::size_t total = 0;
    if (suite == "formulas" || suite == "all") {
        print_suite("formulas", menage::verify::verify_formulas(max_n), passed, total);
    }
    if (suite == "oracles" || suite == "all") {
        print_suite("oracles", menage::verify::verify_oracles(max_n), passed, total);
    }
    if (suite == "ie" || suite == "all") {
        print_suite("ie", menage::verify::verify_ie(max_n), passed, total);
    }
    std::cout << "summary: " << passed << "/" << total << " checks passed\n";
    if (passed != total) {
        throw verification_failure("verification failed");
    }
}

void run_enumerate(const std::string& what, unsigned long p1, bool have_p2, unsigned long p2,
                   bool only_discordant, bool only_valid) {
    if (what == "placements") {
        if (!have_p2) {
            throw std::domain_error("enumerate placements requires the cycle length m and the domino count r");
        }
        if (only_discordant || only_valid) {
            throw std::domain_error("--discordant/--valid do not apply to placements");
        }
        menage::oracles::for_each_domino_placement(p1, p2, [](const menage::oracles::DominoPlacement& p) {
            std::cout << join_starts(p.starts) << "\n";
        });
        return;
    }
    if (have_p2) {
        throw std::domain_error("enumerate " + what + " takes a single size argument n");
    }
    if (what == "permutations") {
        if (only_valid) {
            throw std::domain_error("--valid applies to seatings only");
        }
        menage::oracles::for_each_permutation(p1, [&](const std::vector<unsigned>& p) {
            if (only_discordant && !menage::oracles::detail::discordant_raw(p)) {
                return;
            }
            std::string line = "[";
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i > 0) {
                    line += ',';
                }
                line += std::to_string(p[i]);
            }
            std::cout << line << "]\n";
        });
        return;
    }
    // seatings
    if (only_discordant) {
        throw std::domain_error("--discordant applies to permutations only");
    }
    menage::oracles::for_each_seating(p1, [&](const menage::oracles::Seating& s) {
        if (only_valid && !menage::oracles::is_valid_menage_seating(s)) {
            return;
        }
        std::string line = "[";
        for (std::size_t i = 0; i < s.seats.size(); ++i) {
            if (i > 0) {
                line += ',';
            }
            line += '(';
            line += std::to_string(s.seats[i].couple);
            line += ',';
            line += menage::oracles::font_letter(s.seats[i].font);
            line += ')';
        }
        std::cout << line << "]\n";
    });
}

void run_bench(unsigned long n) {
    using CInt = menage::CountedInt<menage::ExactInteger>;
    using clock = std::chrono::steady_clock;

    CInt::reset_counts();
    auto t0 = clock::now();
    CInt incremental = menage::tait_count_incremental<CInt>(n);
    auto t1 = clock::now();
    CInt::Counts incremental_ops = CInt::counts();

    CInt::reset_counts();
    auto t2 = clock::now();
    CInt direct = menage::tait_count<CInt>(n);
    auto t3 = clock::now();
    CInt::Counts direct_ops = CInt::counts();

    if (incremental != direct) {
        std::cerr << "error: incremental and direct evaluations disagree at n=" << n << "\n";
        throw verification_failure("bench path disagreement");
    }

    std::cout << "n: " << n << "\n";
    std::cout << "paths agree: yes\n";
    std::cout << "value digits: " << menage::to_decimal(incremental.value()).size() << "\n";
    std::cout << "incremental big-int ops: mul=" << incremental_ops.mul
              << " div=" << incremental_ops.div << " add=" << incremental_ops.add
              << " sub=" << incremental_ops.sub << "\n";
    std::cout << "direct big-int ops: mul=" << direct_ops.mul << " div=" << direct_ops.div
              << " add=" << direct_ops.add << " sub=" << direct_ops.sub << "\n";

    auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    std::cerr << "incremental wall time: " << ms(t0, t1) << " ms\n";
    std::cerr << "direct wall time: " << ms(t2, t3) << " ms\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact menage-number engine: counts, tables, enumeration, verification"};
    app.require_subcommand(1);

    std::string count_kind;
    unsigned long count_arg = 0;
    unsigned long count_r = 0;
    CLI::App* count = app.add_subcommand("count", "Print one exact count");
    count->add_option("kind", count_kind, "what to count: menage | tait | dominos")
        ->required()
        ->check(CLI::IsMember({"menage", "tait", "dominos"}));
    count->add_option("n_or_m", count_arg, "couple count n (menage, tait) or cycle length m (dominos)")
        ->required();
    CLI::Option* count_r_opt = count->add_option("r", count_r, "domino count r (dominos only)");

    unsigned long table_from = 0;
    unsigned long table_to = 0;
    std::string table_format = "text";
    bool table_terms = false;
    CLI::App* table = app.add_subcommand("table", "Print tait and menage counts for a range of n");
    table->add_option("from", table_from, "first couple count (>= 2)")->required();
    table->add_option("to", table_to, "last couple count")->required();
    table->add_option("format", table_format, "output format: text | csv | json (default text)")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_flag("--terms", table_terms, "include the per-term decomposition of each tait count");

    unsigned long verify_max_n = 0;
    std::string verify_suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "Run invariant suites against exhaustive oracles");
    verify->add_option("max_n", verify_max_n, "largest couple count to check (clamped per suite)")
        ->required();
    verify->add_option("suite", verify_suite, "suite: formulas | oracles | ie | all (default all)")
        ->check(CLI::IsMember({"formulas", "oracles", "ie", "all"}));

    std::string enum_what;
    unsigned long enum_p1 = 0;
    unsigned long enum_p2 = 0;
    bool enum_discordant = false;
    bool enum_valid = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Print witness objects, one per line");
    enumerate->add_option("what", enum_what, "placements | permutations | seatings")
        ->required()
        ->check(CLI::IsMember({"placements", "permutations", "seatings"}));
    enumerate->add_option("p1", enum_p1, "cycle length m (placements) or size n (otherwise)")
        ->required();
    CLI::Option* enum_p2_opt = enumerate->add_option("p2", enum_p2, "domino count r (placements only)");
    enumerate->add_flag("--discordant", enum_discordant, "permutations: only discordant ones");
    enumerate->add_flag("--valid", enum_valid, "seatings: only valid menage seatings");

    unsigned long bench_n = 0;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time the incremental and direct evaluations (direct cost grows quadratically)");
    bench->add_option("n", bench_n, "couple count")->required();

    count->callback([&] { run_count(count_kind, count_arg, count_r_opt->count() > 0, count_r); });
    table->callback([&] { run_table(table_from, table_to, table_format, table_terms); });
    verify->callback([&] { run_verify(verify_max_n, verify_suite); });
    enumerate->callback([&] {
        run_enumerate(enum_what, enum_p1, enum_p2_opt->count() > 0, enum_p2, enum_discordant,
                      enum_valid);
    });
    bench->callback([&] { run_bench(bench_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_failure&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
