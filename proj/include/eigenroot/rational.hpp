// Exact rational and integer scalars (GMP-backed) plus small helpers used
// throughout: falling factorials, fraction strings, integer powers.
#ifndef EIGENROOT_RATIONAL_HPP
#define EIGENROOT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eigenroot {

using BigInt = boost::multiprecision::mpz_int;
// Always stored canonically: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::mpq_rational;

// n(n-1)...(n-j+1). Zero whenever j > n >= 0 (a factor vanishes).
inline BigInt falling_factorial(long n, long j) {
    if (j < 0) throw std::invalid_argument("falling_factorial: j < 0");
    BigInt acc(1);
    for (long i = 0; i < j; ++i) acc *= BigInt(n - i);
    return acc;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0 to negative power");
        return 1 / pow_rational(base, -e);
    }
    Rational acc(1), b(base);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// "p/q", or just "p" when q == 1.
inline std::string fraction_string(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Inverse of fraction_string. Accepts "p" and "p/q" with optional leading '-'.
inline Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_fraction: bad rational literal '" + text + "'");
    }
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace eigenroot

#endif
