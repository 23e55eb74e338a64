#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lmo {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps every value in canonical form
// (lowest terms, positive denominator), which downstream code relies on.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline int sign(const Rational& x) { return x.sign(); }

// n/d for arbitrary-sign inputs.  The cpp_rational two-argument constructor
// in this Boost version rejects negative denominators outright (its range
// check degenerates for unbounded integers), so all fraction building with a
// denominator of unknown sign must funnel through here.
inline Rational frac(Int n, Int d) {
    if (d == 0) throw std::domain_error("frac: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline Rational rational(long long n, long long d = 1) { return frac(Int(n), Int(d)); }

inline Int floor_int(const Rational& x) {
    Int q = num(x) / den(x);           // truncates toward zero
    if (x < 0 && q * den(x) != num(x)) --q;
    return q;
}

inline Int ceil_int(const Rational& x) { return -floor_int(-x); }

// Nearest integer with the half-open convention round(x) = floor(x + 1/2).
inline Int round_int(const Rational& x) { return floor_int(x + Rational(1, 2)); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline std::string to_string(const Rational& x) { return x.str(); }

// Accepts "n" or "n/d" with an optional leading sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
    std::size_t slash = text.find('/');
    std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto parse_int = [&](const std::string& s, bool allow_sign) -> Int {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i == s.size()) fail();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') fail();
        return Int(s[0] == '+' ? s.substr(1) : s);
    };
    Int n = parse_int(ns, true);
    Int d = parse_int(ds, false);
    if (d == 0) throw std::domain_error("not a rational: zero denominator");
    return Rational(n, d);
}

inline bool is_canonical(const Rational& x) {
    return den(x) > 0 && boost::multiprecision::gcd(num(x), den(x)) == 1;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace lmo
