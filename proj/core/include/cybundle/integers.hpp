#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cybundle {

// All arithmetic in this library is exact. Integers are arbitrary precision
// (intermediate entries of a Smith reduction can grow far beyond any fixed
// width) and rationals are exact quotients of them.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division, also for negative operands: floor_div(-7, 2) == -4.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Nonnegative remainder: mod_floor(-7, 2) == 1.
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

inline Rational make_rational(const Int& num, const Int& den) { return Rational(num, den); }

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int floor_rational(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

// Reduce into [0, 1).
inline Rational mod_one(const Rational& r) { return r - Rational(floor_rational(r)); }

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cybundle
