#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace stratum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num" or "num/den" with optional leading '-'. Throws on malformed
// input or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// base^exp for integer exp of either sign; base must be nonzero when exp < 0.
inline Rational pow_rational(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("0 raised to negative power");
        return Rational(1) / pow_rational(base, -exp);
    }
    Rational acc(1), b = base;
    unsigned long long e = static_cast<unsigned long long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Exact square root of a nonnegative rational: returns false unless both
// numerator and denominator are perfect squares.
inline bool sqrt_exact(const Rational& r, Rational& out) {
    if (r < 0) return false;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}

}  // namespace stratum
