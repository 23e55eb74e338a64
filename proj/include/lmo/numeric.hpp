#pragma once

#include "lmo/hbar_series.hpp"
#include "lmo/invariants.hpp"
#include "lmo/rational.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lmo {

struct FloatResult {
    double value;
    double est_error;
};

// Horner evaluation at hbar = t; the error estimate is the magnitude of the
// last retained term (the series is asymptotic, so this is a heuristic).
inline FloatResult eval_hbar_series(const HbarSeries& z, double t) {
    const int n = z.order_cap();
    double acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * t + to_double(z[k]);
    return {acc, std::fabs(to_double(z[n]) * std::pow(t, n))};
}

// s(p, q) through the cotangent form (1/4|q|) sum cot(k pi/q) cot(k p pi/q).
inline FloatResult dedekind_cotangent(long long p, long long q) {
    if (q == 0) throw std::domain_error("dedekind_cotangent: q = 0");
    if (std::gcd(p, q) != 1)
        throw std::domain_error("dedekind_cotangent: p, q not coprime");
    const double pi = 3.14159265358979323846;
    const long long qa = q < 0 ? -q : q;
    double acc = 0.0, mag = 0.0;
    for (long long k = 1; k < qa; ++k) {
        double t1 = std::tan(pi * static_cast<double>(k) / static_cast<double>(q));
        double t2 = std::tan(pi * static_cast<double>(k * p % q) / static_cast<double>(q));
        double term = 1.0 / (t1 * t2);
        acc += term;
        mag += std::fabs(term);
    }
    double value = acc / (4.0 * static_cast<double>(qa));
    double est = (mag / (4.0 * static_cast<double>(qa)) + std::fabs(value)) *
                 static_cast<double>(qa) * std::numeric_limits<double>::epsilon() * 8.0;
    return {value, est};
}

namespace detail {

inline double sinhc(double x) {
    if (std::fabs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

struct GK15 {
    double value;
    double err;
};

// One Gauss(7)/Kronrod(15) panel on [lo, hi].
inline GK15 gk15_panel(const std::function<double(double)>& f, double lo, double hi) {
    static const std::array<double, 8> xk = {
        0.0,
        0.2077849550078984676006894037732449,
        0.4058451513773971669066064120769615,
        0.5860872354676911302941448382587296,
        0.7415311855993944398638647732807884,
        0.8648644233597690727897127886409262,
        0.9491079123427585245261896840478513,
        0.9914553711208126392068546975263285};
    static const std::array<double, 8> wk = {
        0.2094821410847278280129991748917143,
        0.2044329400752988924141619992346491,
        0.1903505780647854099132564024210137,
        0.1690047266392679028265834265985503,
        0.1406532597155259187451895905102379,
        0.1047900103222501838398763225415180,
        0.0630920926299785532907006631892043,
        0.0229353220105292249637320080589695};
    static const std::array<double, 4> wg = {
        0.4179591836734693877551020408163265,
        0.3818300505051189449503697754889751,
        0.2797053914892766679014677714237796,
        0.1294849661688696932706114326790820};
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const double f0 = f(c);
    double k = wk[0] * f0;
    double g = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double fa = f(c - h * xk[i]), fb = f(c + h * xk[i]);
        k += wk[i] * (fa + fb);
        if (i % 2 == 0) g += wg[i / 2] * (fa + fb);
    }
    double kv = k * h, gv = g * h;
    return {kv, std::fabs(kv - gv)};
}

inline double adaptive_gk(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    struct Seg {
        double lo, hi, value, err;
    };
    GK15 whole = gk15_panel(f, lo, hi);
    std::vector<Seg> segs{{lo, hi, whole.value, whole.err}};
    for (int round = 0; round < 4000; ++round) {
        double err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (err < tol || segs.size() > 4000) break;
        Seg s = segs[worst];
        double mid = 0.5 * (s.lo + s.hi);
        GK15 a = gk15_panel(f, s.lo, mid), b = gk15_panel(f, mid, s.hi);
        segs[worst] = {s.lo, mid, a.value, a.err};
        segs.push_back({mid, s.hi, b.value, b.err});
    }
    double acc = 0.0;
    for (const auto& s : segs) acc += s.value;
    return acc;
}

}  // namespace detail

// Numeric evaluation of the integral form of z_rest at hbar = t:
//   sqrt(e0^3/(pi t)) exp((t/(4 e0))(n - 2 - sum 1/p_i^2))
//     * int dbeta e^{-t e0 beta^2/4} prod_i p_i sinh(t beta/(2 p_i))
//                                    / sinh(t beta/2)^{n-2}.
// Written through sinhc the integrand is smooth everywhere, including the
// removable point beta = 0 for n >= 3.
inline FloatResult z_rest_quadrature(const SeifertData& d, double t, double tol = 1e-9) {
    validate(d);
    Rational e = e0(d);
    if (e == 0) throw std::domain_error("seifert: e0 = 0, not a rational homology sphere");
    if (e < 0)
        throw std::domain_error("z_rest_quadrature: e0 < 0 needs a rotated contour, not implemented");
    if (t <= 0) throw std::domain_error("z_rest_quadrature: need t > 0");
    const double e0d = to_double(e);
    const int n = static_cast<int>(d.fibers.size());
    std::vector<double> ps;
    double quad = n - 2;
    for (const auto& f : d.fibers) {
        double p = to_double(Rational(f.p));
        ps.push_back(p);
        quad -= 1.0 / (p * p);
    }
    auto integrand = [&](double beta) {
        double u = t * beta / 2.0;
        double v = std::exp(-t * e0d * beta * beta / 4.0) * u * u;
        for (double p : ps) v *= detail::sinhc(u / p);
        return v / std::pow(detail::sinhc(u), n - 2);
    };
    // Symmetric integrand; find B with a negligible tail, then integrate.
    double b = 8.0 / std::sqrt(t * e0d);
    while (std::fabs(integrand(b)) > tol * 1e-3 && b < 1e9) b *= 2.0;
    double tail = std::fabs(integrand(b)) * b;  // crude bound on what is cut off
    double body = 2.0 * detail::adaptive_gk(integrand, 0.0, b, tol / 4.0);
    double pref = std::sqrt(e0d * e0d * e0d / (3.14159265358979323846 * t)) *
                  std::exp(t / (4.0 * e0d) * quad);
    return {pref * body, pref * (tol / 2.0 + tail)};
}

}  // namespace lmo
