#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

#include "sigraph/error.hpp"

namespace sigraph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Canonical "num/den" form used in all JSON output, e.g. "-3/4", "0/1".
inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Shortest human form: "-3/4" but plain "2" when the denominator is 1.
inline std::string rat_to_short_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_to_string(r);
}

/// Parses "num", "num/den" or a decimal like "0.25" into an exact rational.
inline Rat parse_rat(const std::string& text) {
    auto fail = [&]() -> Rat {
        throw Error(Errc::parse_error, "malformed rational: '" + text + "'");
    };
    if (text.empty()) return fail();
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) return fail();
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") return fail();
            Int num(digits);
            Int den = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return Rat(num, den);
        }
        return Rat(Int(text));
    } catch (const std::runtime_error&) {
        return fail();
    }
}

/// Floor of the integer square root; input must be nonnegative.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

/// Exact square root of a nonnegative rational, if it is rational.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = rat_num(r), d = rat_den(r);
    Int sn = isqrt(n), sd = isqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

}  // namespace sigraph
