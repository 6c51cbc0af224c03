#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexmagic {

/// Exact rational scalar used for every cell value and coefficient.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class NumberFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline Integer parse_unsigned(std::string_view s) {
    Integer v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace detail

/// Parses `[+-]digits` or `[+-]digits/digits`. The denominator must be
/// greater than one and the fraction must be in lowest terms, so that every
/// rational has exactly one accepted spelling.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!detail::all_digits(num))
        throw NumberFormatError("malformed rational '" + std::string(text) + "'");
    Integer p = detail::parse_unsigned(num);
    Integer q = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!detail::all_digits(den))
            throw NumberFormatError("malformed rational '" + std::string(text) + "'");
        q = detail::parse_unsigned(den);
        if (q <= 1)
            throw NumberFormatError("denominator must exceed 1 in '" + std::string(text) + "'");
        if (boost::multiprecision::gcd(p, q) != 1)
            throw NumberFormatError("rational not in lowest terms: '" + std::string(text) + "'");
    }
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

/// Lenient variant for command-line input: accepts non-reduced fractions
/// such as `4/2` and reduces them.
inline Rational parse_rational_lenient(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_rational(text);
    Rational num = parse_rational(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    if (!detail::all_digits(den))
        throw NumberFormatError("malformed rational '" + std::string(text) + "'");
    Integer q = detail::parse_unsigned(den);
    if (q == 0) throw NumberFormatError("zero denominator in '" + std::string(text) + "'");
    return num / Rational(q);
}

/// `p/q` in lowest terms, or a bare integer when q = 1.
inline std::string to_string(const Rational& r) {
    const Integer& p = boost::multiprecision::numerator(r);
    const Integer& q = boost::multiprecision::denominator(r);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// r^k for any integer k; r must be nonzero when k < 0.
inline Rational pow(Rational base, long long k) {
    if (k < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        base = Rational(1) / base;
        k = -k;
    }
    Rational result = 1;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

}  // namespace hexmagic
