#include "rlc/rational.hpp"

#include <cctype>

namespace rlc {

namespace {

// Decimal integer parser: avoids the base-prefix rules of the bigint string
// constructor and reports malformed input as a BadInput error.
BigInt parse_decimal(const std::string& s, const std::string& full) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) fail(Errc::BadInput, "malformed rational literal '" + full + "'");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(Errc::BadInput, "malformed rational literal '" + full + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

} // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(Errc::BadInput, "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_decimal(s.substr(0, slash), s);
        BigInt den = parse_decimal(s.substr(slash + 1), s);
        if (den == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_decimal(s, s));
    const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) fail(Errc::BadInput, "malformed rational literal '" + s + "'");
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::BadInput, "malformed rational literal '" + s + "'");
    const BigInt scale = big_pow(10, tail.size());
    BigInt whole = parse_decimal(head, s);
    const bool neg = !head.empty() && head[0] == '-';
    BigInt frac = parse_decimal(tail, s);
    BigInt num = whole * scale + (neg ? -frac : frac);
    return Rational(num, scale);
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool q_pow_frac_le(std::uint64_t q, std::int64_t u, std::int64_t w, const Rational& bound) {
    if (w <= 0) fail(Errc::DomainError, "q_pow_frac_le: nonpositive root");
    if (bound <= 0) fail(Errc::DomainError, "q_pow_frac_le: nonpositive bound");
    // q^(u/w) <= a/b  <=>  q^u * b^w <= a^w  (u may be negative; clear it first)
    BigInt a = boost::multiprecision::numerator(bound);
    BigInt b = boost::multiprecision::denominator(bound);
    BigInt lhs = 1, rhs = 1;
    if (u >= 0)
        lhs = big_pow(BigInt(q), static_cast<std::uint64_t>(u));
    else
        rhs = big_pow(BigInt(q), static_cast<std::uint64_t>(-u));
    lhs *= big_pow(b, static_cast<std::uint64_t>(w));
    rhs *= big_pow(a, static_cast<std::uint64_t>(w));
    return lhs <= rhs;
}

} // namespace rlc
