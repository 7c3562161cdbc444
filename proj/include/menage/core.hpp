#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "menage/exact_integer.hpp"

namespace menage {

/**
 * Closed-form counts around the menage problem.
 *
 * The central quantities:
 *  - domino_count(m, r): placements of r non-overlapping dominos on an
 *    m-position cycle, (m/(m-r))*C(m-r, r).
 *  - tait_count(n): permutations of {0..n-1} that disagree everywhere with
 *    both the identity and the cyclic shift i -> i+1, via the Touchard sum
 *    sum_r (-1)^r * domino_count(2n, r) * (n-r)!.
 *  - menage_count(n): seatings of n couples on 2n labeled cyclic seats with
 *    alternating fonts and no couple adjacent, 2 * n! * tait_count(n).
 *
 * All values are exact integers. Every division is checked for a zero
 * remainder; a nonzero remainder throws instead of truncating.
 *
 * The formulas are rejected outside their combinatorial domain: a 2-cycle
 * double-counts the single two-cell placement, and the Touchard sum at n=1
 * evaluates to -1 where the true discordant count is 0, so m >= 3 and
 * n >= 2 are required rather than silently returning formula values.
 */

template <ExactInt Int = ExactInteger>
Int factorial(unsigned long k) {
    Int result(1UL);
    for (unsigned long i = 2; i <= k; ++i) {
        result *= Int(i);
    }
    return result;
}

/// C(a, b), exactly; 0 when b < 0 or b > a.
template <ExactInt Int = ExactInteger>
Int binomial(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a) {
        return Int(0UL);
    }
    unsigned long k = static_cast<unsigned long>(b);
    if (a - k < k) {
        k = a - k;
    }
    Int result(1UL);
    // Each prefix is itself C(a-k+i, i), so the division by i is exact.
    for (unsigned long i = 1; i <= k; ++i) {
        result = exact_div(Int(result * Int(a - k + i)), Int(i));
    }
    return result;
}

/// Number of ways to place r non-overlapping dominos on a cycle of m
/// positions: (m/(m-r)) * C(m-r, r). Zero when the dominos cannot fit.
template <ExactInt Int = ExactInteger>
Int domino_count(unsigned long m, unsigned long r) {
    if (m < 3) {
        throw std::domain_error("domino_count: cycle length m must be at least 3");
    }
    if (2 * r > m) {
        return Int(0UL);
    }
    return exact_div(Int(Int(m) * binomial<Int>(m - r, static_cast<long>(r))), Int(m - r));
}

/// Same count in the stars-and-bars form (m/r) * C(m-r-1, r-1).
/// Undefined at r = 0; agrees with domino_count on 1 <= 2r <= m.
template <ExactInt Int = ExactInteger>
Int domino_count_alt(unsigned long m, unsigned long r) {
    if (m < 3) {
        throw std::domain_error("domino_count_alt: cycle length m must be at least 3");
    }
    if (r < 1) {
        throw std::domain_error("domino_count_alt: r must be at least 1 for this form");
    }
    if (2 * r > m) {
        throw std::domain_error("domino_count_alt: r must satisfy 2r <= m");
    }
    return exact_div(Int(Int(m) * binomial<Int>(m - r - 1, static_cast<long>(r) - 1)), Int(r));
}

/// One summand of the Touchard sum: (-1)^r * domino_count(2n, r) * (n-r)!.
template <ExactInt Int = ExactInteger>
Int touchard_term(unsigned long n, unsigned long r) {
    if (n < 2) {
        throw std::domain_error("touchard_term: couple count n must be at least 2");
    }
    if (r > n) {
        throw std::domain_error("touchard_term: term index r must satisfy 0 <= r <= n");
    }
    Int term = Int(domino_count<Int>(2 * n, r) * factorial<Int>(n - r));
    return (r % 2 == 0) ? term : Int(-term);
}

/// Per-term decomposition of the Touchard sum for one n.
template <ExactInt Int = ExactInteger>
struct TouchardBreakdown {
    struct Term {
        unsigned long r;
        Int domino_count;   // d_r on the 2n-cycle
        int sign;           // (-1)^r
        Int tail_factorial; // (n-r)!
        Int term_value;     // sign * domino_count * tail_factorial
    };

    unsigned long n = 0;
    std::vector<Term> terms;
    Int total{};
};

namespace detail {

// Factorials 0! .. k! in one ascending pass.
template <ExactInt Int>
std::vector<Int> factorial_table(unsigned long k) {
    std::vector<Int> table;
    table.reserve(k + 1);
    table.push_back(Int(1UL));
    for (unsigned long i = 1; i <= k; ++i) {
        table.push_back(Int(table.back() * Int(i)));
    }
    return table;
}

template <ExactInt Int>
void require_couple_count(unsigned long n, const char* who) {
    if (n < 2) {
        throw std::domain_error(std::string(who) + ": couple count n must be at least 2");
    }
}

} // namespace detail

/// Touchard sum evaluated term by term from the closed forms:
/// sum_{r=0}^{n} (-1)^r * domino_count(2n, r) * (n-r)!.
template <ExactInt Int = ExactInteger>
Int tait_count(unsigned long n) {
    detail::require_couple_count<Int>(n, "tait_count");
    const std::vector<Int> fact = detail::factorial_table<Int>(n);
    Int total(0UL);
    for (unsigned long r = 0; r <= n; ++r) {
        Int term = Int(domino_count<Int>(2 * n, r) * fact[n - r]);
        if (r % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

/// tait_count(n) with every summand recorded.
template <ExactInt Int = ExactInteger>
TouchardBreakdown<Int> tait_breakdown(unsigned long n) {
    detail::require_couple_count<Int>(n, "tait_breakdown");
    const std::vector<Int> fact = detail::factorial_table<Int>(n);
    TouchardBreakdown<Int> breakdown;
    breakdown.n = n;
    breakdown.terms.reserve(n + 1);
    breakdown.total = Int(0UL);
    for (unsigned long r = 0; r <= n; ++r) {
        Int d = domino_count<Int>(2 * n, r);
        int sign = (r % 2 == 0) ? 1 : -1;
        Int tail = fact[n - r];
        Int value = Int(d * tail);
        if (sign < 0) {
            value = -value;
        }
        breakdown.total += value;
        breakdown.terms.push_back({r, std::move(d), sign, std::move(tail), std::move(value)});
    }
    return breakdown;
}

/// Touchard sum evaluated with O(n) big-integer multiplications, stepping
/// both factors from term r to term r+1:
///   d_{r+1}     = d_r * (2n-2r)(2n-2r-1) / ((r+1)(2n-r-1))
///   (n-r-1)!    = (n-r)! / (n-r)
/// Both divisions are checked-exact.
template <ExactInt Int = ExactInteger>
Int tait_count_incremental(unsigned long n) {
    detail::require_couple_count<Int>(n, "tait_count_incremental");
    Int d(1UL);                       // d_0 on the 2n-cycle
    Int tail = factorial<Int>(n);     // n!
    Int total = tail;                 // r = 0 term
    for (unsigned long r = 0; r < n; ++r) {
        d = exact_div(Int(d * Int(2 * n - 2 * r) * Int(2 * n - 2 * r - 1)),
                      Int(Int(r + 1) * Int(2 * n - r - 1)));
        tail = exact_div(tail, Int(n - r));
        Int term = Int(d * tail);
        if (r % 2 == 0) { // this is term r+1, of opposite parity to r
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

/// Seatings of n couples on 2n labeled cyclic seats with alternating fonts
/// and no couple adjacent: 2 * n! * tait_count(n).
template <ExactInt Int = ExactInteger>
Int menage_count(unsigned long n) {
    detail::require_couple_count<Int>(n, "menage_count");
    return Int(Int(2UL) * factorial<Int>(n) * tait_count<Int>(n));
}

/// Streams (n, tait_count(n)) for n = 2..n_max, each value computed by the
/// incremental term recurrence. Single-consumer; carries no shared state.
template <ExactInt Int = ExactInteger>
class TaitSequence {
public:
    explicit TaitSequence(unsigned long n_max) : next_(2), n_max_(n_max) {
        if (n_max < 2) {
            throw std::domain_error("TaitSequence: n_max must be at least 2");
        }
    }

    std::optional<std::pair<unsigned long, Int>> next() {
        if (next_ > n_max_) {
            return std::nullopt;
        }
        unsigned long n = next_++;
        return std::make_pair(n, tait_count_incremental<Int>(n));
    }

private:
    unsigned long next_;
    unsigned long n_max_;
};

} // namespace menage
