#pragma once

#include "lmo/dedekind.hpp"
#include "lmo/hbar_series.hpp"
#include "lmo/rational.hpp"
#include "lmo/reduced_element.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace lmo {

// s window slack so that degree-lowering operators still leave room at the
// requested hbar order.
inline int default_s_cap(int order) { return order + 12; }

struct LensData {
    Int p, q;
};

inline void validate(const LensData& d) {
    if (d.p == 0) throw std::domain_error("lens: p = 0");
    if (boost::multiprecision::gcd(d.p, d.q) != 1)
        throw std::domain_error("lens: p, q not coprime");
}

struct SeifertFiber {
    Int p, q;
};

struct SeifertData {
    Int b;
    std::vector<SeifertFiber> fibers;
};

inline void validate(const SeifertData& d) {
    for (const auto& f : d.fibers) {
        if (f.p == 1)
            throw std::domain_error("seifert: p = 1 fiber (fold it into b)");
        if (f.p < 2) throw std::domain_error("seifert: fiber needs p >= 2");
        if (f.q <= 0 || f.q >= f.p) throw std::domain_error("seifert: fiber needs 0 < q < p");
        if (boost::multiprecision::gcd(f.p, f.q) != 1)
            throw std::domain_error("seifert: fiber p, q not coprime");
    }
}

inline Rational e0(const SeifertData& d) {
    Rational e(d.b);
    for (const auto& f : d.fibers) e += frac(f.q, f.p);
    return e;
}

// |H_1| = |p1 ... pn * e0|.
inline Rational h1_order(const SeifertData& d) {
    Rational r = e0(d);
    for (const auto& f : d.fibers) r *= Rational(f.p);
    return abs(r);
}

// Z^LMO of the lens space L(p,q):
// <Omega, Omega^{-1} Omega_{x/p}> exp(-S(q/p) hbar / 4).
inline HbarSeries lmo_lens(const LensData& d, int order) {
    validate(d);
    const int sc = default_s_cap(order);
    ReducedElement om = build_omega(sc, order);
    ReducedElement arg = elem_mul(elem_inv(om), scale_legs(om, frac(Int(1), d.p)));
    HbarSeries bracket = pair(om, arg);
    Rational s = dedekind_symbol(frac(d.q, d.p));
    return bracket * exp_linear(-s / 4, order);
}

namespace detail {

// Omega^{2-n} * prod_i Omega_{x / p_i}.
inline ReducedElement seifert_bracket_arg(const SeifertData& d, int sc, int order) {
    ReducedElement om = build_omega(sc, order);
    ReducedElement p = elem_pow(om, 2 - static_cast<int>(d.fibers.size()));
    for (const auto& f : d.fibers) p = elem_mul(p, scale_legs(om, Rational(Int(1), f.p)));
    return p;
}

inline Rational sum_dedekind(const SeifertData& d) {
    Rational s = 0;
    for (const auto& f : d.fibers) s += dedekind_symbol(Rational(f.q, f.p));
    return s;
}

inline HbarSeries pair_omega_omega(int order) {
    const int sc = default_s_cap(order);
    ReducedElement om = build_omega(sc, order);
    return pair(om, om);
}

}  // namespace detail

// lambda_w = (1/12) [ e0 + (2-n)/e0 - 3 sign(e0)
//                     + sum_i ( 1/(e0 p_i^2) - S(q_i/p_i) ) ].
inline Rational casson_walker(const SeifertData& d) {
    validate(d);
    Rational e = e0(d);
    if (e == 0) throw std::domain_error("seifert: e0 = 0, not a rational homology sphere");
    const int n = static_cast<int>(d.fibers.size());
    Rational acc = e + Rational(2 - n) / e - Rational(3 * sign(e));
    for (const auto& f : d.fibers)
        acc += Rational(1) / (e * Rational(f.p * f.p)) - dedekind_symbol(Rational(f.q, f.p));
    return acc / 12;
}

// Z^LMO of the Seifert fibered rational homology sphere S^3(b; q_i/p_i):
// <Omega,Omega>^{-1} exp((hbar/4)(e0 - 3 sign e0 - sum S(q_i/p_i)))
//                    <exp(s/(2 e0)), Omega^{2-n} prod Omega_{x/p_i}>.
inline HbarSeries lmo_seifert(const SeifertData& d, int order) {
    validate(d);
    Rational e = e0(d);
    if (e == 0) throw std::domain_error("seifert: e0 = 0, not a rational homology sphere");
    const int sc = default_s_cap(order);
    HbarSeries bracket = pair_gaussian(Rational(1) / (2 * e), detail::seifert_bracket_arg(d, sc, order));
    Rational pref = e - Rational(3 * sign(e)) - detail::sum_dedekind(d);
    return series_inv(detail::pair_omega_omega(order)) * exp_linear(pref / 4, order) * bracket;
}

// Same invariant, refactored through the Casson-Walker term:
// <Omega,Omega>^{-1} exp(3 hbar lambda_w)
//   exp((hbar/(4 e0))(n - 2 - sum 1/p_i^2)) <exp(s/(2 e0)), ...>.
inline HbarSeries lmo_seifert_alt(const SeifertData& d, int order) {
    validate(d);
    Rational e = e0(d);
    if (e == 0) throw std::domain_error("seifert: e0 = 0, not a rational homology sphere");
    const int sc = default_s_cap(order);
    const int n = static_cast<int>(d.fibers.size());
    HbarSeries bracket = pair_gaussian(Rational(1) / (2 * e), detail::seifert_bracket_arg(d, sc, order));
    Rational quad(n - 2);
    for (const auto& f : d.fibers) quad -= Rational(Int(1), f.p * f.p);
    return series_inv(detail::pair_omega_omega(order)) *
           exp_linear(Rational(3) * casson_walker(d), order) *
           exp_linear(quad / (4 * e), order) * bracket;
}

// The invariant carries lambda_w as 3 lambda_w hbar + O(hbar^2).
inline Rational casson_from_series(const HbarSeries& z) {
    if (z.order_cap() < 1) throw std::invalid_argument("casson_from_series: need order >= 1");
    return z[1] / 3;
}

// Normalization constants Z(U^{+-1}) = <Omega,Omega>^{-1} exp(-+ 3 hbar/4).
inline HbarSeries z_norm(int framing_sign, int order) {
    if (framing_sign != 1 && framing_sign != -1)
        throw std::invalid_argument("z_norm: framing sign must be +-1");
    return series_inv(detail::pair_omega_omega(order)) *
           exp_linear(Rational(-3 * framing_sign, 4), order);
}

// Pre-normalized invariant of the f-framed unknot, computed two ways:
//   closed:   <Omega, Omega^{-2} Omega_{x/f}> exp(-(f/4 + 1/(2f)) hbar)
//   integral: <Omega,Omega>^{-2} exp(-f hbar/4) int Omega^2 e^{f s/2} dx.
struct AarhusUnknot {
    HbarSeries closed_form;
    HbarSeries via_integral;
};

inline AarhusUnknot aarhus0_unknot(const Int& f, int order) {
    if (f == 0) throw std::domain_error("aarhus0_unknot: framing 0 is not invertible");
    const int sc = default_s_cap(order);
    ReducedElement om = build_omega(sc, order);
    ReducedElement om2inv = elem_pow(om, -2);
    HbarSeries closed = pair(om, elem_mul(om2inv, scale_legs(om, frac(Int(1), f)))) *
                        exp_linear(-(Rational(f) / 4 + Rational(1) / (2 * Rational(f))), order);
    HbarSeries oo_inv = series_inv(pair(om, om));
    HbarSeries integral = oo_inv * oo_inv * exp_linear(Rational(-f) / 4, order) *
                          fgi_1var(elem_mul(om, om), Rational(f));
    return {std::move(closed), std::move(integral)};
}

// The part of the invariant left after stripping the sinh prefactor and the
// Casson-Walker exponential:
// z_rest = <exp(s/(2 e0)), Omega^{2-n} prod Omega_{x/p_i}>
//          exp((hbar/(4 e0))(n - 2 - sum 1/p_i^2)).
inline HbarSeries z_rest(const SeifertData& d, int order) {
    validate(d);
    Rational e = e0(d);
    if (e == 0) throw std::domain_error("seifert: e0 = 0, not a rational homology sphere");
    const int sc = default_s_cap(order);
    const int n = static_cast<int>(d.fibers.size());
    HbarSeries bracket = pair_gaussian(Rational(1) / (2 * e), detail::seifert_bracket_arg(d, sc, order));
    Rational quad(n - 2);
    for (const auto& f : d.fibers) quad -= Rational(Int(1), f.p * f.p);
    return bracket * exp_linear(quad / (4 * e), order);
}

// Integral homology sphere parameters: given pairwise coprime p_i >= 2 and a
// sign, the unique (b, q_i) with e0 = sign / (p_1 ... p_n).  Solved by
// inverting P/p_j modulo p_j (Chinese remainder style).
inline SeifertData ihs_parameters(const std::vector<Int>& ps, int sgn) {
    if (sgn != 1 && sgn != -1) throw std::invalid_argument("ihs_parameters: sign must be +-1");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] < 2) throw std::domain_error("ihs_parameters: fiber needs p >= 2");
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (boost::multiprecision::gcd(ps[i], ps[j]) != 1)
                throw std::domain_error(
                    "ihs_parameters: p_i not pairwise coprime, not an integral homology "
                    "sphere presentation");
    }
    Int prod = 1;
    for (const Int& p : ps) prod *= p;
    SeifertData d;
    Rational e(Int(sgn), prod);
    Rational qsum = 0;
    for (const Int& p : ps) {
        Int rest = prod / p;
        // q = sign * rest^{-1} mod p, normalized to (0, p)
        Int q = 0;
        for (Int cand = 1; cand < p; ++cand)
            if (((cand * rest - sgn) % p) == 0) {
                q = cand;
                break;
            }
        if (q == 0) throw std::logic_error("ihs_parameters: no modular inverse");
        d.fibers.push_back({p, q});
        qsum += Rational(q, p);
    }
    Rational b = e - qsum;
    if (den(b) != 1) throw std::logic_error("ihs_parameters: b not integral");
    d.b = num(b);
    validate(d);
    return d;
}

}  // namespace lmo
