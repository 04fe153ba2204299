#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hglab {

// Exact rational arithmetic for densities and parameter formulas.
// Derived quantities like 4000 r^5 (log n)^2 / (eps^3 lambda^3) overflow
// 128-bit integers once log2(n) is represented as a dyadic rational, so the
// underlying integers are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Largest integer <= q.
inline BigInt floor_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);  // d > 0 by invariant
    BigInt quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline long long floor_to_ll(const Rational& q) {
    return floor_rational(q).convert_to<long long>();
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Parses "p", "p/q". Used by CLI flags like --lambda 1/2.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

// Deterministic dyadic approximation of log2(n) with `frac_bits` fractional
// bits, exact when n is a power of two. Classic square-and-compare: keep
// x in [1,2) as a Q2.62 fixed-point value, square it, shift out the integer
// bit into the result.
inline Rational log2_dyadic(unsigned long long n, int frac_bits = 32) {
    if (n == 0) throw std::invalid_argument("log2 of zero");
    if (frac_bits < 0 || frac_bits > 48) throw std::invalid_argument("frac_bits out of range");
    const int k = std::bit_width(n) - 1;  // floor(log2 n)
    if ((n & (n - 1)) == 0) return make_rational(k);
    // x = n / 2^k in [1,2) as Q2.62
    unsigned __int128 x = (static_cast<unsigned __int128>(n) << 62) >> k;
    BigInt frac = 0;
    for (int i = 0; i < frac_bits; ++i) {
        x = (x * x) >> 62;
        frac <<= 1;
        if (x >= (static_cast<unsigned __int128>(2) << 62)) {
            x >>= 1;
            frac |= 1;
        }
    }
    BigInt denom = BigInt(1) << frac_bits;
    return Rational(BigInt(k) * denom + frac, denom);
}

}  // namespace hglab
