#pragma once

#include <string>
#include <vector>

#include "menage/core.hpp"
#include "menage/exact_integer.hpp"
#include "menage/oracles.hpp"

namespace menage::verify {

/**
 * Named invariant suites. Each check covers one identity family over a
 * range; ranges are clamped to the bounds where exhaustive oracles stay
 * cheap, and every clamp is reported as a warning so "verify 1000 all"
 * remains usable.
 */

struct Check {
    std::string name;
    bool passed = false;
    std::string detail; // first failure, empty when passed
};

struct SuiteReport {
    std::vector<std::string> warnings;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const Check& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

inline unsigned long clamp_bound(unsigned long requested, unsigned long cap,
                                 const std::string& what, SuiteReport& report) {
    if (requested > cap) {
        report.warnings.push_back("warning: " + what + " clamped to " + std::to_string(cap) +
                                  " (requested " + std::to_string(requested) + ")");
        return cap;
    }
    return requested;
}

inline void require_max_n(unsigned long max_n, const char* who) {
    if (max_n < 2) {
        throw std::domain_error(std::string(who) + ": max_n must be at least 2");
    }
}

} // namespace detail

/// Pure formula identities: the two closed forms of the domino count, the
/// exactness of its division, boundary values, breakdown consistency, and
/// agreement of the incremental evaluation with the direct one.
inline SuiteReport verify_formulas(unsigned long max_n) {
    detail::require_max_n(max_n, "verify_formulas");
    SuiteReport report;
    const unsigned long m_max =
        detail::clamp_bound(2 * max_n, 200, "formulas: domino cycle length", report);
    const unsigned long n_breakdown =
        detail::clamp_bound(max_n, 50, "formulas: breakdown couple count", report);
    const unsigned long n_incr =
        detail::clamp_bound(max_n, 100, "formulas: incremental-path couple count", report);

    {
        Check c{"closed-form agreement: domino_count == domino_count_alt (m=3.." +
                    std::to_string(m_max) + ", r=1..m/2)",
                true, ""};
        for (unsigned long m = 3; m <= m_max && c.passed; ++m) {
            for (unsigned long r = 1; 2 * r <= m; ++r) {
                ExactInteger a = domino_count(m, r);
                ExactInteger b = domino_count_alt(m, r);
                if (a != b) {
                    c.passed = false;
                    c.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " +
                               to_decimal(a) + " vs " + to_decimal(b);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"exact divisibility: (m-r) divides m*C(m-r,r) (m=3.." + std::to_string(m_max) +
                    ", r=0..m/2)",
                true, ""};
        for (unsigned long m = 3; m <= m_max && c.passed; ++m) {
            for (unsigned long r = 0; 2 * r <= m; ++r) {
                ExactInteger num = ExactInteger(m) * binomial(m - r, static_cast<long>(r));
                if (num % ExactInteger(m - r) != 0) {
                    c.passed = false;
                    c.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                               ": remainder nonzero";
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"boundary values: domino_count(m,0)=1 and domino_count(m,m/2)=2 for even m (m=3.." +
                    std::to_string(m_max) + ")",
                true, ""};
        for (unsigned long m = 3; m <= m_max && c.passed; ++m) {
            if (domino_count(m, 0) != 1) {
                c.passed = false;
                c.detail = "m=" + std::to_string(m) + ": empty placement count != 1";
            } else if (m % 2 == 0 && domino_count(m, m / 2) != 2) {
                c.passed = false;
                c.detail = "m=" + std::to_string(m) + ": perfect tiling count != 2";
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"breakdown consistency: totals, factors, and strictly alternating signs (n=2.." +
                    std::to_string(n_breakdown) + ")",
                true, ""};
        for (unsigned long n = 2; n <= n_breakdown && c.passed; ++n) {
            TouchardBreakdown<ExactInteger> b = tait_breakdown(n);
            ExactInteger sum(0);
            for (unsigned long r = 0; r <= n; ++r) {
                const auto& t = b.terms[r];
                int expected_sign = (r % 2 == 0) ? 1 : -1;
                ExactInteger value = t.domino_count * t.tail_factorial;
                if (t.sign < 0) {
                    value = -value;
                }
                if (t.r != r || t.sign != expected_sign || t.term_value != value ||
                    t.tail_factorial != factorial(n - r) ||
                    t.domino_count != domino_count(2 * n, r)) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               ": inconsistent term entry";
                    break;
                }
                sum += t.term_value;
            }
            if (c.passed && (sum != b.total || b.total != tait_count(n))) {
                c.passed = false;
                c.detail = "n=" + std::to_string(n) + ": total != sum of terms";
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"incremental equals direct: tait_count_incremental == tait_count (n=2.." +
                    std::to_string(n_incr) + ")",
                true, ""};
        for (unsigned long n = 2; n <= n_incr; ++n) {
            ExactInteger a = tait_count_incremental(n);
            ExactInteger b = tait_count(n);
            if (a != b) {
                c.passed = false;
                c.detail = "n=" + std::to_string(n) + ": " + to_decimal(a) + " vs " + to_decimal(b);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

/// Formula-vs-enumeration equivalences: domino placements, discordant
/// permutations, and full seatings, plus the hit-count bound.
inline SuiteReport verify_oracles(unsigned long max_n) {
    detail::require_max_n(max_n, "verify_oracles");
    SuiteReport report;
    const unsigned long m_max =
        detail::clamp_bound(2 * max_n, 16, "oracles: placement cycle length", report);
    const unsigned long n_tait =
        detail::clamp_bound(max_n, 8, "oracles: discordant-count couple count", report);
    const unsigned long n_menage =
        detail::clamp_bound(max_n, 5, "oracles: seating-count couple count", report);
    const unsigned long n_hits = detail::clamp_bound(max_n, 8, "oracles: hit-bound couple count", report);

    {
        Check c{"placement equivalence: enumeration length == domino_count (m=3.." +
                    std::to_string(m_max) + ", all r)",
                true, ""};
        for (unsigned long m = 3; m <= m_max && c.passed; ++m) {
            for (unsigned long r = 0; r <= m / 2 + 1 && c.passed; ++r) {
                unsigned long count = 0;
                std::vector<unsigned long> prev;
                bool first = true;
                oracles::for_each_domino_placement(m, r, [&](const oracles::DominoPlacement& p) {
                    ++count;
                    if (!p.is_well_formed() || p.cycle_length != m || p.starts.size() != r) {
                        c.passed = false;
                        c.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                   ": malformed placement emitted";
                    } else if (!first && !(prev < p.starts)) {
                        c.passed = false;
                        c.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                   ": not strictly lexicographically increasing";
                    }
                    prev = p.starts;
                    first = false;
                });
                if (!c.passed) {
                    break;
                }
                ExactInteger expected = (2 * r > m) ? ExactInteger(0) : domino_count(m, r);
                if (ExactInteger(count) != expected) {
                    c.passed = false;
                    c.detail = "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " +
                               std::to_string(count) + " placements vs formula " +
                               to_decimal(expected);
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"tait equivalence: brute_tait == tait_count (n=2.." + std::to_string(n_tait) + ")",
                true, ""};
        for (unsigned long n = 2; n <= n_tait; ++n) {
            ExactInteger brute = oracles::brute_tait(n);
            ExactInteger formula = tait_count(n);
            if (brute != formula) {
                c.passed = false;
                c.detail = "n=" + std::to_string(n) + ": brute " + to_decimal(brute) +
                           " vs formula " + to_decimal(formula);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"menage equivalence: brute_menage == menage_count == 2*n!*brute_tait (n=2.." +
                    std::to_string(n_menage) + ")",
                true, ""};
        for (unsigned long n = 2; n <= n_menage; ++n) {
            ExactInteger brute = oracles::brute_menage(n);
            ExactInteger formula = menage_count(n);
            ExactInteger via_tait = ExactInteger(2) * factorial(n) * oracles::brute_tait(n);
            if (brute != formula || brute != via_tait) {
                c.passed = false;
                c.detail = "n=" + std::to_string(n) + ": brute " + to_decimal(brute) +
                           " vs formula " + to_decimal(formula) + " vs 2*n!*tait " +
                           to_decimal(via_tait);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"hit-count bounds: 0 <= hit_count <= n over all permutations (n=2.." +
                    std::to_string(n_hits) + ")",
                true, ""};
        for (unsigned long n = 2; n <= n_hits && c.passed; ++n) {
            oracles::for_each_permutation(n, [&](const std::vector<unsigned>& p) {
                unsigned hits = oracles::detail::hits_raw(p);
                if (hits > n) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + ": hit count " + std::to_string(hits) +
                               " exceeds n";
                }
            });
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

/// The inclusion-exclusion identity behind the Touchard sum, checked term
/// by term against exhaustive hit counting, and its telescoped total.
inline SuiteReport verify_ie(unsigned long max_n) {
    detail::require_max_n(max_n, "verify_ie");
    SuiteReport report;
    const unsigned long n_max = detail::clamp_bound(max_n, 7, "ie: couple count", report);

    {
        Check c{"termwise identity: ie_term_sum(n,r) == domino_count(2n,r)*(n-r)! (n=2.." +
                    std::to_string(n_max) + ", r=0..n)",
                true, ""};
        for (unsigned long n = 2; n <= n_max && c.passed; ++n) {
            for (unsigned long r = 0; r <= n; ++r) {
                ExactInteger lhs = oracles::ie_term_sum(n, r);
                ExactInteger rhs = domino_count(2 * n, r) * factorial(n - r);
                if (lhs != rhs) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                               to_decimal(lhs) + " vs " + to_decimal(rhs);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        Check c{"telescoping: sum of signed ie terms == brute_tait (n=2.." + std::to_string(n_max) +
                    ")",
                true, ""};
        for (unsigned long n = 2; n <= n_max; ++n) {
            ExactInteger signed_sum(0);
            for (unsigned long r = 0; r <= n; ++r) {
                ExactInteger t = oracles::ie_term_sum(n, r);
                if (r % 2 == 0) {
                    signed_sum += t;
                } else {
                    signed_sum -= t;
                }
            }
            ExactInteger brute = oracles::brute_tait(n);
            if (signed_sum != brute) {
                c.passed = false;
                c.detail = "n=" + std::to_string(n) + ": " + to_decimal(signed_sum) + " vs " +
                           to_decimal(brute);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

} // namespace menage::verify
