#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace latgm {

// All arithmetic in this library is exact. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// x^e for integer e >= 0, with 0^0 = 1.
inline Rat rat_pow(const Rat& x, const Int& e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat result = 1;
    Rat base = x;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

/// Parses "num/den" or a plain integer string. Denominator must be positive.
inline Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

/// Canonical form: "n" when the value is integral, else "n/d" reduced.
inline std::string format_rational(const Rat& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace latgm
