#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace freemix {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// (-1)^e for any integer e, including negative exponents.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline double to_double(const bigrat& q) { return q.convert_to<double>(); }

// Exact integer value of a rational known to be integral.
inline bigint to_integer(const bigrat& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::domain_error("rational is not an integer: " + q.str());
    return boost::multiprecision::numerator(q);
}

inline std::string to_string(const bigint& n) { return n.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const bigrat& q) {
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

// Decimal integer; leading zeros are stripped so they are never read as an
// octal prefix.
inline bigint parse_integer(std::string_view text) {
    std::string s(text);
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    size_t first_digit = start;
    while (first_digit + 1 < s.size() && s[first_digit] == '0') ++first_digit;
    std::string normalized = (start && s[0] == '-' ? "-" : "") + s.substr(first_digit);
    if (normalized.empty() || normalized == "-")
        throw std::invalid_argument("bad integer literal: " + s);
    return bigint(normalized);
}

// Accepts "p", "p/q" and plain decimal literals ("1.5" -> 3/2).
inline bigrat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        bigint num = parse_integer(s.substr(0, slash));
        bigint den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return bigrat(num) / bigrat(den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        bigint den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return bigrat(parse_integer(digits)) / bigrat(den);
    }
    return bigrat(parse_integer(s));
}

}  // namespace freemix
