#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "menage/exact_integer.hpp"

namespace menage::oracles {

/**
 * Exhaustive small-scale enumeration used to verify every closed form by
 * independent computation. Nothing here calls the formula side; binomials
 * needed internally come from a local Pascal table.
 *
 * Bounds keep full enumeration trivial: permutations up to 9! and seatings
 * up to 10!.
 */

// ---------------------------------------------------------------------------
// Permutations

/// A bijection on {0..n-1}; the constructor rejects anything else.
class Permutation {
public:
    explicit Permutation(std::vector<unsigned> mapping) : mapping_(std::move(mapping)) {
        std::vector<bool> seen(mapping_.size(), false);
        for (unsigned v : mapping_) {
            if (v >= mapping_.size() || seen[v]) {
                throw std::invalid_argument("Permutation: mapping is not a bijection on {0..n-1}");
            }
            seen[v] = true;
        }
    }

    unsigned size() const { return static_cast<unsigned>(mapping_.size()); }
    unsigned operator()(unsigned i) const { return mapping_[i]; }
    const std::vector<unsigned>& mapping() const { return mapping_; }

private:
    std::vector<unsigned> mapping_;
};

namespace detail {

inline bool discordant_raw(const std::vector<unsigned>& p) {
    const unsigned n = static_cast<unsigned>(p.size());
    for (unsigned i = 0; i < n; ++i) {
        if (p[i] == i || p[i] == (i + 1) % n) {
            return false;
        }
    }
    return true;
}

inline unsigned hits_raw(const std::vector<unsigned>& p) {
    const unsigned n = static_cast<unsigned>(p.size());
    unsigned hits = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (p[i] == i) {
            ++hits;
        }
        if (p[i] == (i + 1) % n) {
            ++hits;
        }
    }
    return hits;
}

// Pascal triangle big enough for every hit count the oracles can see.
inline constexpr unsigned kPascalSize = 16;
inline constexpr std::array<std::array<std::uint64_t, kPascalSize>, kPascalSize> make_pascal() {
    std::array<std::array<std::uint64_t, kPascalSize>, kPascalSize> c{};
    for (unsigned i = 0; i < kPascalSize; ++i) {
        c[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j) {
            c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
        }
    }
    return c;
}
inline constexpr auto kPascal = make_pascal();

inline std::uint64_t small_choose(unsigned a, unsigned b) {
    return (b <= a && a < kPascalSize) ? kPascal[a][b] : 0;
}

} // namespace detail

/// True iff p disagrees everywhere with both the identity and the cyclic
/// shift i -> i+1 (mod n).
inline bool is_discordant(const Permutation& p) {
    if (p.size() < 1) {
        throw std::domain_error("is_discordant: permutation must have size at least 1");
    }
    return detail::discordant_raw(p.mapping());
}

/// Number of satisfied forbidden constraints: fixed points plus agreements
/// with the cyclic shift. Zero exactly for discordant permutations.
inline unsigned hit_count(const Permutation& p) {
    if (p.size() < 2) {
        throw std::domain_error("hit_count: permutation must have size at least 2");
    }
    return detail::hits_raw(p.mapping());
}

/// Calls fn(mapping) for every permutation of {0..n-1}, lexicographically.
template <typename Fn>
void for_each_permutation(unsigned long n, Fn&& fn) {
    if (n < 1 || n > 9) {
        throw std::domain_error("for_each_permutation: n must be between 1 and 9");
    }
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0U);
    do {
        fn(const_cast<const std::vector<unsigned>&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

/// Discordant-permutation count by full enumeration of all n! permutations.
template <ExactInt Int = ExactInteger>
Int brute_tait(unsigned long n) {
    if (n < 1 || n > 9) {
        throw std::domain_error("brute_tait: n must be between 1 and 9 for exhaustive counting");
    }
    unsigned long long count = 0;
    for_each_permutation(n, [&](const std::vector<unsigned>& p) {
        if (detail::discordant_raw(p)) {
            ++count;
        }
    });
    return Int(static_cast<unsigned long>(count));
}

// ---------------------------------------------------------------------------
// Domino placements on a cycle

/// r non-overlapping dominos on an m-cycle, each covering (s, s+1 mod m).
struct DominoPlacement {
    unsigned long cycle_length = 0;
    std::vector<unsigned long> starts; // strictly increasing

    bool is_well_formed() const {
        const unsigned long m = cycle_length;
        if (m < 3 || 2 * starts.size() > m) {
            return false;
        }
        std::vector<bool> covered(m, false);
        unsigned long prev = m; // sentinel
        for (unsigned long s : starts) {
            if (s >= m || (prev != m && s <= prev)) {
                return false; // out of range or not strictly increasing
            }
            prev = s;
            unsigned long a = s, b = (s + 1) % m;
            if (covered[a] || covered[b]) {
                return false;
            }
            covered[a] = covered[b] = true;
        }
        return true;
    }
};

/// Calls fn(placement) for every placement of r non-overlapping dominos on
/// an m-cycle, in lexicographic order of the start vector. Nothing is
/// emitted when 2r > m.
template <typename Fn>
void for_each_domino_placement(unsigned long m, unsigned long r, Fn&& fn) {
    if (m < 3 || m > 20) {
        throw std::domain_error("for_each_domino_placement: m must be between 3 and 20");
    }
    if (2 * r > m) {
        return;
    }
    DominoPlacement placement;
    placement.cycle_length = m;
    placement.starts.reserve(r);

    // Sorted starts are valid iff consecutive starts differ by >= 2 and the
    // wrap-around gap from the last start back to the first is >= 2; the
    // wrap constraint only binds when the first start is 0.
    auto rec = [&](auto&& self, unsigned long next_min) -> void {
        if (placement.starts.size() == r) {
            fn(const_cast<const DominoPlacement&>(placement));
            return;
        }
        unsigned long limit = m - 1;
        if (placement.starts.size() + 1 == r && !placement.starts.empty() &&
            placement.starts.front() == 0) {
            limit = m - 2;
        }
        for (unsigned long s = next_min; s <= limit; ++s) {
            placement.starts.push_back(s);
            self(self, s + 2);
            placement.starts.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<DominoPlacement> collect_domino_placements(unsigned long m, unsigned long r) {
    std::vector<DominoPlacement> out;
    for_each_domino_placement(m, r, [&](const DominoPlacement& p) { out.push_back(p); });
    return out;
}

template <ExactInt Int = ExactInteger>
Int count_domino_placements(unsigned long m, unsigned long r) {
    unsigned long count = 0;
    for_each_domino_placement(m, r, [&](const DominoPlacement&) { ++count; });
    return Int(count);
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion hit sums

/// Sum over all permutations p of size n of C(hit_count(p), r): the number
/// of (permutation, r satisfied constraints) incidences. Term by term this
/// equals domino_count(2n, r) * (n-r)!.
template <ExactInt Int = ExactInteger>
Int ie_term_sum(unsigned long n, unsigned long r) {
    if (n < 2 || n > 8) {
        throw std::domain_error("ie_term_sum: n must be between 2 and 8 for exhaustive counting");
    }
    if (r > n) {
        throw std::domain_error("ie_term_sum: r must satisfy 0 <= r <= n");
    }
    unsigned long long sum = 0;
    for_each_permutation(n, [&](const std::vector<unsigned>& p) {
        sum += detail::small_choose(detail::hits_raw(p), static_cast<unsigned>(r));
    });
    return Int(static_cast<unsigned long>(sum));
}

// ---------------------------------------------------------------------------
// Seatings

enum class Font : unsigned char { X = 0, Y = 1 };

inline char font_letter(Font f) { return f == Font::X ? 'X' : 'Y'; }

struct Person {
    unsigned couple = 0;
    Font font = Font::X;

    friend bool operator==(const Person&, const Person&) = default;
};

/// An assignment of 2n persons (n couples, fonts X/Y) to 2n labeled cyclic
/// seats, seat order.
struct Seating {
    std::vector<Person> seats;

    /// Every (couple, font) pair of some n occurs exactly once.
    bool is_well_formed() const {
        if (seats.size() % 2 != 0 || seats.empty()) {
            return false;
        }
        const unsigned n = static_cast<unsigned>(seats.size() / 2);
        std::vector<bool> seen(2 * n, false);
        for (const Person& p : seats) {
            if (p.couple >= n) {
                return false;
            }
            unsigned id = p.couple * 2 + static_cast<unsigned>(p.font);
            if (seen[id]) {
                return false;
            }
            seen[id] = true;
        }
        return true;
    }
};

/// True iff every cyclically adjacent pair of seats differs in both font
/// and couple.
inline bool is_valid_menage_seating(const Seating& s) {
    if (s.seats.size() < 4 || s.seats.size() % 2 != 0 || !s.is_well_formed()) {
        throw std::domain_error("is_valid_menage_seating: need a well-formed seating of n >= 2 couples");
    }
    const std::size_t len = s.seats.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Person& a = s.seats[i];
        const Person& b = s.seats[(i + 1) % len];
        if (a.font == b.font || a.couple == b.couple) {
            return false;
        }
    }
    return true;
}

/// Calls fn(seating) for every assignment of the 2n persons to the 2n
/// seats, in lexicographic order of (couple, font) per seat.
template <typename Fn>
void for_each_seating(unsigned long n, Fn&& fn) {
    if (n < 2 || n > 5) {
        throw std::domain_error("for_each_seating: n must be between 2 and 5");
    }
    std::vector<unsigned> ids(2 * n); // id = couple*2 + font
    std::iota(ids.begin(), ids.end(), 0U);
    Seating seating;
    seating.seats.resize(2 * n);
    do {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            seating.seats[i] = Person{ids[i] / 2, static_cast<Font>(ids[i] % 2)};
        }
        fn(const_cast<const Seating&>(seating));
    } while (std::next_permutation(ids.begin(), ids.end()));
}

/// Valid-seating count by full enumeration of all (2n)! assignments.
template <ExactInt Int = ExactInteger>
Int brute_menage(unsigned long n) {
    if (n < 2 || n > 5) {
        throw std::domain_error("brute_menage: n must be between 2 and 5 for exhaustive counting");
    }
    const unsigned len = static_cast<unsigned>(2 * n);
    std::vector<unsigned> ids(len); // id = couple*2 + font; font differs iff low bits differ
    std::iota(ids.begin(), ids.end(), 0U);
    unsigned long long count = 0;
    do {
        bool ok = true;
        for (unsigned i = 0; i < len; ++i) {
            unsigned a = ids[i];
            unsigned b = ids[(i + 1) == len ? 0 : i + 1];
            if (((a ^ b) & 1U) == 0 || (a >> 1) == (b >> 1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++count;
        }
    } while (std::next_permutation(ids.begin(), ids.end()));
    return Int(static_cast<unsigned long>(count));
}

} // namespace menage::oracles
