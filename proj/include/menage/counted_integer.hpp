#pragma once

#include <ostream>
#include <utility>

#include "menage/exact_integer.hpp"

namespace menage {

/// Drop-in integer wrapper that tallies big-integer operations, used by the
/// bench command to report work alongside wall time. Counters are static
/// per instantiation; not for concurrent use.
template <ExactInt Inner = ExactInteger>
class CountedInt {
public:
    struct Counts {
        unsigned long long add = 0;
        unsigned long long sub = 0;
        unsigned long long mul = 0;
        unsigned long long div = 0;
    };

    CountedInt() = default;
    CountedInt(unsigned long w) : v_(w) {}
    explicit CountedInt(Inner v) : v_(std::move(v)) {}

    const Inner& value() const { return v_; }

    static const Counts& counts() { return counts_; }
    static void reset_counts() { counts_ = Counts{}; }

    friend CountedInt operator+(const CountedInt& a, const CountedInt& b) {
        ++counts_.add;
        return CountedInt(Inner(a.v_ + b.v_));
    }
    friend CountedInt operator-(const CountedInt& a, const CountedInt& b) {
        ++counts_.sub;
        return CountedInt(Inner(a.v_ - b.v_));
    }
    friend CountedInt operator*(const CountedInt& a, const CountedInt& b) {
        ++counts_.mul;
        return CountedInt(Inner(a.v_ * b.v_));
    }
    friend CountedInt operator/(const CountedInt& a, const CountedInt& b) {
        ++counts_.div;
        return CountedInt(Inner(a.v_ / b.v_));
    }
    friend CountedInt operator%(const CountedInt& a, const CountedInt& b) {
        ++counts_.div;
        return CountedInt(Inner(a.v_ % b.v_));
    }
    friend CountedInt operator-(const CountedInt& a) {
        ++counts_.sub;
        return CountedInt(Inner(-a.v_));
    }

    CountedInt& operator+=(const CountedInt& o) {
        ++counts_.add;
        v_ += o.v_;
        return *this;
    }
    CountedInt& operator-=(const CountedInt& o) {
        ++counts_.sub;
        v_ -= o.v_;
        return *this;
    }
    CountedInt& operator*=(const CountedInt& o) {
        ++counts_.mul;
        v_ *= o.v_;
        return *this;
    }

    friend bool operator==(const CountedInt& a, const CountedInt& b) { return a.v_ == b.v_; }
    friend bool operator!=(const CountedInt& a, const CountedInt& b) { return a.v_ != b.v_; }
    friend bool operator<(const CountedInt& a, const CountedInt& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const CountedInt& a) { return os << a.v_; }

private:
    static inline Counts counts_{};
    Inner v_{};
};

} // namespace menage
