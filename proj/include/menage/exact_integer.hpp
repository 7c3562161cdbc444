#pragma once

#include <concepts>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace menage {

/// Arbitrary-precision signed integer used for all counts. Arithmetic is
/// exact at every magnitude; values serialize to plain decimal strings.
using ExactInteger = mpz_class;

/// Integer-like types the counting templates accept: exact ring arithmetic,
/// Euclidean division, comparisons, and construction from machine words.
template <typename T>
concept ExactInt = requires(T a, T b, unsigned long w) {
    T{};
    T(w);
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { a % b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a != b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    a += b;
    a -= b;
    a *= b;
};

/// Quotient of a division that is required to be exact. A nonzero remainder
/// means a counting identity has been violated, so it is a hard failure
/// (std::logic_error), never a silent truncation.
template <ExactInt Int>
Int exact_div(const Int& num, const Int& den) {
    Int q = Int(num / den);
    if (Int(q * den) != num) {
        throw std::logic_error("exact_div: division left a remainder");
    }
    return q;
}

template <ExactInt Int>
std::string to_decimal(const Int& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

inline std::string to_decimal(const ExactInteger& value) {
    return value.get_str(10);
}

/// Strict inverse of to_decimal: an optional '-' followed by digits only.
/// Rejects whitespace, '+', and empty input.
inline ExactInteger parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("parse_decimal: empty input");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("parse_decimal: not a decimal integer: '" +
                                        std::string(text) + "'");
        }
    }
    return ExactInteger(std::string(text), 10);
}

} // namespace menage
