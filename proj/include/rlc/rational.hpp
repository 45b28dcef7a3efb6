#ifndef RLC_RATIONAL_HPP
#define RLC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "rlc/error.hpp"

namespace rlc {

// Exact arithmetic backbone. All plurality/moment/sigma statistics are exact
// rationals; Hamming-ball volumes are exact big integers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, std::uint64_t e) {
    return Rational(big_pow(boost::multiprecision::numerator(base), e),
                    big_pow(boost::multiprecision::denominator(base), e));
}

// Parses "3/4", "0.75" or "2" into an exact rational.
Rational parse_rational(const std::string& s);

// Canonical "num/den" (or "num" when integral) rendering, used in JSON.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Exact truth value of q^(u/w) <= bound, for q >= 1, w >= 1 and bound > 0.
// Used for the fractional-exponent thresholds, which cannot be represented
// as rationals but can be compared exactly after clearing the w-th root.
bool q_pow_frac_le(std::uint64_t q, std::int64_t u, std::int64_t w, const Rational& bound);

} // namespace rlc

#endif
