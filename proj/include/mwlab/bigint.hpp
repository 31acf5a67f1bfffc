#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators, so
// every ratio is built through here.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline BigInt pow_int(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, std::uint64_t exp) {
    Rational r = 1;
    Rational b = base;
    while (exp != 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw bad();
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw bad();
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rational(num, den);
}

// Largest y >= 0 with y^n <= x.  Requires x >= 0 and n >= 1.
inline BigInt floor_nth_root(const BigInt& x, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("floor_nth_root: zero index");
    if (x < 0) throw std::invalid_argument("floor_nth_root: negative radicand");
    if (x == 0) return 0;
    std::size_t bits = boost::multiprecision::msb(x) + 1;
    BigInt hi = BigInt(1) << (bits / n + 1); // hi^n > x
    BigInt lo = 0;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (pow_int(mid, n) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace mwlab
