#pragma once

#include "lmo/rational.hpp"

#include <stdexcept>
#include <vector>

namespace lmo {

// Sawtooth ((x)): x - floor(x) - 1/2 away from integers, 0 at integers.
inline Rational sawtooth(const Rational& x) {
    if (den(x) == 1) return 0;
    return x - Rational(floor_int(x)) - Rational(1, 2);
}

// s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((k p / q)).  p, q need not be coprime.
inline Rational dedekind_sum(const Int& p, const Int& q) {
    if (q == 0) throw std::domain_error("dedekind_sum: q = 0");
    Int qa = q < 0 ? Int(-q) : q;
    Rational acc = 0;
    for (Int k = 1; k < qa; ++k) acc += sawtooth(frac(k, q)) * sawtooth(frac(k * p, q));
    return acc;
}

// S(p/q) = 12 sign(q) s(p, q).  Depends only on the fraction p/q, so the
// input is reduced first; canonical form has q > 0, making sign(q) = +1.
inline Rational dedekind_symbol(const Rational& f) {
    return Rational(12) * dedekind_sum(num(f), den(f));
}

inline Rational dedekind_symbol(const Int& p, const Int& q) {
    if (q == 0) throw std::domain_error("dedekind_symbol: q = 0");
    return dedekind_symbol(frac(p, q));
}

struct DedekindRow {
    long long p;
    long long q;
    Int q_times_S;  // q * S(p/q), always an integer
};

// Rows (p, q, q*S(p/q)) for 1 <= p < q <= qmax with gcd(p, q) = 1.
inline std::vector<DedekindRow> dedekind_table(int qmax) {
    if (qmax < 1) throw std::invalid_argument("dedekind_table: qmax < 1");
    std::vector<DedekindRow> rows;
    for (long long q = 1; q <= qmax; ++q)
        for (long long p = 1; p < q; ++p) {
            if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
            Rational qs = Rational(q) * dedekind_symbol(Int(p), Int(q));
            if (den(qs) != 1) throw std::logic_error("dedekind_table: q*S not integral");
            rows.push_back({p, q, num(qs)});
        }
    return rows;
}

}  // namespace lmo
