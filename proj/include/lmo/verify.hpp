#pragma once

#include "lmo/cfrac.hpp"
#include "lmo/dedekind.hpp"
#include "lmo/invariants.hpp"
#include "lmo/numeric.hpp"
#include "lmo/reduced_element.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace lmo {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// sum_m hbar^(2m) / (4^m (2m+1)!), the expansion of sinh(hbar/2)/(hbar/2).
inline HbarSeries sinh_half_series(int cap) {
    HbarSeries s(cap);
    Rational c = 1;
    for (int m = 0; 2 * m <= cap; ++m) {
        s.coeff(2 * m) = c;
        c /= Rational(4) * Rational(2 * m + 2) * Rational(2 * m + 3);
    }
    return s;
}

namespace detail {

inline ReducedElement mul_hbar_monomial(const ReducedElement& a, const Rational& c, int deg) {
    ReducedElement r(a.s_cap(), a.hbar_cap());
    for (int m = 0; m <= a.s_cap(); ++m)
        for (int k = deg; k <= a.hbar_cap(); ++k) r.coeff(m, k) = c * a.coeff(m, k - deg);
    return r;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> numd(-6, 6), dend(1, 5);
    return Rational(numd(rng), dend(rng));
}

inline SeifertData random_seifert(std::mt19937& rng) {
    std::uniform_int_distribution<int> bd(-3, 3), nd(0, 4), pd(2, 9);
    for (;;) {
        SeifertData d;
        d.b = bd(rng);
        int n = nd(rng);
        for (int i = 0; i < n; ++i) {
            Int p = pd(rng);
            std::uniform_int_distribution<int> qd(1, static_cast<int>(p) - 1);
            Int q = qd(rng);
            while (boost::multiprecision::gcd(p, q) != 1) q = qd(rng);
            d.fibers.push_back({p, q});
        }
        if (e0(d) != 0) return d;
    }
}

}  // namespace detail

// Every exact identity the library is built on, checked end to end at the
// requested truncation order.  Used by the `verify` subcommand and tests.
inline std::vector<CheckResult> run_identity_suite(int order) {
    std::vector<CheckResult> out;
    auto add = [&out](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };
    const int sc = default_s_cap(order);
    const ReducedElement om = build_omega(sc, order);
    const HbarSeries sinh_ref = sinh_half_series(order);
    std::mt19937 rng(20240817);

    {
        auto b = modified_bernoulli(3);
        add("modified Bernoulli pinned values",
            b[0] == Rational(1, 48) && b[1] == Rational(-1, 5760),
            "b2 = 1/48, b4 = -1/5760");
    }
    add("wheels element: exp of wheel sum equals closed form",
        agree_on_overlap(build_omega_from_wheels(sc, order), om));
    add("<Omega, Omega> = sinh(hbar/2)/(hbar/2)", pair(om, om) == sinh_ref);
    {
        bool ok = true;
        for (int m = 0; m <= std::min(order, 8); ++m) {
            HbarSeries p = pair(ReducedElement::monomial(1, m, 0, sc, order), om);
            ok = ok && p == HbarSeries::monomial(Rational(Int(1), Int(1) << m), m, order);
        }
        add("<s^m, Omega> = (hbar/2)^m", ok);
    }
    {
        bool ok = true;
        ReducedElement g = om;
        for (int k = 1; k <= order; ++k) {
            g = glue_strut(g);
            ok = ok && agree_on_overlap(
                           g, detail::mul_hbar_monomial(om, Rational(Int(1), Int(1) << k), k));
        }
        add("glue_strut pseudo-linearity on the wheels element", ok);
    }
    {
        bool ok = true;
        for (Rational alpha : {Rational(1), Rational(-1), Rational(2), Rational(1, 3)}) {
            ReducedElement acc(sc - order, order);
            ReducedElement g = om;
            Rational c = 1;  // (alpha/2)^k / k!
            for (int k = 0; k <= order; ++k) {
                acc = acc + detail::mul_hbar_monomial(g, c, 0);
                if (k < order) g = glue_strut(g);
                c *= alpha / Rational(2 * (k + 1));
            }
            ok = ok && agree_on_overlap(acc, mul_hbar(om, exp_linear(alpha / 4, order)));
        }
        add("exponential of the glue action rescales the wheels element", ok);
    }
    {
        ReducedElement e = ReducedElement::exp_strut(Rational(1, 2), sc, order);
        ReducedElement lhs = hat(om, e);
        ReducedElement rhs = mul_hbar(elem_mul(om, e), exp_linear(Rational(1, 4), order));
        add("hat(Omega, exp(s/2)) = exp(hbar/4) Omega exp(s/2)",
            agree_on_overlap(lhs, rhs), "window s <= 12");
    }
    {
        ReducedElement lhs = hat(elem_inv(om), om);
        ReducedElement rhs = mul_hbar(om, series_inv(pair(om, om)));
        add("hat(Omega^{-1}, Omega) = <Omega,Omega>^{-1} Omega", agree_on_overlap(lhs, rhs));
    }
    {
        bool ok = true;
        const Rational cases[][3] = {{1, 1, 2},
                                     {1, Rational(1, 3), Rational(5, 3)},
                                     {2, 3, 7},
                                     {1, 1, -1},
                                     {0, 0, 3}};
        for (const auto& c : cases) {
            const Rational &a = c[0], &b = c[1], &g = c[2];
            HbarSeries lhs = fgi_1var(elem_mul(scale_legs(om, a), scale_legs(om, b)), g);
            HbarSeries rhs = exp_linear(-(a * a + b * b) / (4 * g), order) *
                             pair(om, scale_legs(om, a * b / g));
            ok = ok && lhs == rhs;
        }
        add("one-variable Gaussian integral of two scaled wheels elements", ok,
            "5 parameter triples");
    }
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            ReducedElement a(6, 6), b(6, 6);
            for (int m = 0; m <= 6; ++m)
                for (int k = m; k <= 6; ++k) {
                    a.coeff(m, k) = detail::random_rational(rng);
                    b.coeff(m, k) = detail::random_rational(rng);
                }
            ok = ok && pair(a, b) == pair(b, a);
        }
        add("pair symmetry on random hbar-dominated elements", ok);
    }
    {
        bool ok = om.is_hbar_dominated() && elem_inv(om).is_hbar_dominated() &&
                  elem_mul(om, om).is_hbar_dominated() &&
                  scale_legs(om, Rational(5, 7)).is_hbar_dominated() &&
                  !ReducedElement::exp_strut(Rational(1, 2), sc, order).is_hbar_dominated();
        add("hbar-domination closed under product, inverse, leg scaling", ok);
    }
    {
        bool ok = true;
        int count = 0;
        for (int p = -30; p <= 30; ++p)
            for (int q = -30; q <= 30; ++q) {
                if (p == 0 || q == 0 || boost::multiprecision::gcd(Int(p), Int(q)) != 1)
                    continue;
                Rational lhs = dedekind_symbol(Int(p), Int(q)) + dedekind_symbol(Int(q), Int(p));
                Rational rhs = rational(p, q) + rational(q, p) + rational(1, p * q) -
                               Rational(3 * (p * q > 0 ? 1 : -1));
                ok = ok && lhs == rhs;
                ++count;
            }
        std::ostringstream d;
        d << count << " coprime pairs";
        add("Dedekind reciprocity", ok, d.str());
    }
    {
        bool ok = true;
        for (int p = -20; p <= 20; ++p)
            for (int q = 1; q <= 20; ++q) {
                if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
                ok = ok && dedekind_symbol(Int(-p), Int(q)) == -dedekind_symbol(Int(p), Int(q));
                ok = ok && dedekind_symbol(Int(p + q), Int(q)) == dedekind_symbol(Int(p), Int(q));
            }
        add("Dedekind antisymmetry and periodicity", ok);
    }
    {
        bool ok = true;
        for (int p = 2; p <= 25; ++p)
            for (int q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                for (int qq = 1; qq < p; ++qq)
                    if ((q * qq) % p == 1)
                        ok = ok && dedekind_symbol(Int(q), Int(p)) ==
                                       dedekind_symbol(Int(qq), Int(p));
            }
        add("Dedekind inverse symmetry S(q/p) = S(q'/p) for q q' = 1 mod p", ok);
    }
    {
        bool ok = true;
        for (const auto& row : dedekind_table(30))
            ok = ok && Rational(row.q_times_S, Int(row.q)) ==
                           dedekind_symbol(Int(row.p), Int(row.q));
        add("q S(p/q) integrality in the table", ok, "qmax 30");
    }
    {
        bool ok = true;
        double worst = 0;
        for (int p = -20; p <= 20; ++p)
            for (int q = 2; q <= 20; ++q) {
                if (p == 0 || std::gcd(p < 0 ? -p : p, q) != 1) continue;
                double exact = to_double(dedekind_sum(Int(p), Int(q)));
                double cot = dedekind_cotangent(p, q).value;
                worst = std::max(worst, std::fabs(exact - cot));
            }
        ok = worst < 1e-9;
        std::ostringstream d;
        d << "max deviation " << worst;
        add("cotangent form of the Dedekind sum", ok, d.str());
    }
    {
        bool ok = true;
        for (int p = -25; p <= 25; ++p)
            for (int q = -25; q <= 25; ++q) {
                if (q == 0 || boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
                ok = ok && dedekind_via_surgery(Int(p), Int(q)) ==
                               dedekind_symbol(Int(p), Int(q));
            }
        add("surgery presentation route reproduces S(p/q)", ok, "|p|,|q| <= 25");
    }
    {
        bool ok = true;
        for (int p = -25; p <= 25; ++p)
            for (int q = -25; q <= 25; ++q) {
                if (q == 0 || boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
                auto a = cfrac_expand(Int(p), Int(q));
                auto ev = cfrac_eval(a);
                ok = ok && a.size() >= 2;
                ok = ok && frac(ev.p, ev.q) == frac(Int(p), Int(q));
                ok = ok && ev.p * ev.v - ev.u * ev.q == 1;
                ok = ok && lambda_det(a) == ev.q;
                inverse_corners(a);  // throws if the two routes disagree
                std::size_t bits = 0;
                for (Int t = q < 0 ? Int(-q) : Int(q); t > 0; t >>= 1) ++bits;
                ok = ok && a.size() <= 2 * bits + 2;
            }
        add("continued fraction round-trip, determinant, corners, length", ok,
            "|p|,|q| <= 25");
    }
    {
        HbarSeries l1 = lmo_lens({Int(25), Int(4)}, order);
        HbarSeries l2 = lmo_lens({Int(25), Int(9)}, order);
        bool ok = l1 == l2;
        for (int p = 2; p <= 10 && ok; ++p)
            for (int q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                ok = ok && lmo_lens({Int(p), Int(q)}, order) ==
                               lmo_lens({Int(p), Int(q + p)}, order);
                for (int qq = 1; qq < p; ++qq)
                    if ((q * qq) % p == 1)
                        ok = ok && lmo_lens({Int(p), Int(q)}, order) ==
                                       lmo_lens({Int(p), Int(qq)}, order);
            }
        add("lens invariance under q -> q + p and q -> q^{-1} mod p", ok,
            "includes L(25,4) = L(25,9)");
    }
    {
        bool ok = lmo_lens({Int(1), Int(0)}, order) == HbarSeries::constant(1, order) &&
                  lmo_lens({Int(1), Int(5)}, order) == HbarSeries::constant(1, order) &&
                  lmo_lens({Int(-1), Int(3)}, order) == HbarSeries::constant(1, order);
        add("trivial surgeries give the trivial invariant", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 8; ++t) {
            SeifertData d = detail::random_seifert(rng);
            HbarSeries z = lmo_seifert(d, order);
            ok = ok && z == lmo_seifert_alt(d, order);
            ok = ok && casson_from_series(z) == casson_walker(d);
            HbarSeries rest = z_rest(d, order);
            ok = ok && rest[0] == 1 && (order < 1 || rest[1] == 0);
            ok = ok && z == series_inv(sinh_ref) *
                                exp_linear(Rational(3) * casson_walker(d), order) * rest;
        }
        add("Seifert invariant: both formulas, Casson-Walker slope, factorization", ok,
            "8 random presentations");
    }
    {
        bool ok = z_rest(SeifertData{Int(1), {}}, order) == sinh_ref &&
                  z_rest(SeifertData{Int(-1), {{Int(2), Int(1)}, {Int(3), Int(1)}}}, order) ==
                      sinh_ref;
        add("z_rest of S^3 presentations collapses to sinh(hbar/2)/(hbar/2)", ok);
    }
    {
        bool ok = true;
        for (long long f : {1LL, -1LL, 2LL, 3LL, -5LL}) {
            AarhusUnknot a = aarhus0_unknot(Int(f), order);
            ok = ok && a.closed_form == a.via_integral;
        }
        ok = ok && aarhus0_unknot(Int(1), order).closed_form == z_norm(1, order);
        ok = ok && aarhus0_unknot(Int(-1), order).closed_form == z_norm(-1, order);
        add("framed unknot: closed form = Gaussian integral; framing +-1 normalizations",
            ok);
    }
    {
        bool ok = true;
        for (int b : {2, 3, -3, 5}) {
            HbarSeries s = lmo_seifert(SeifertData{Int(b), {}}, order);
            ok = ok && s == lmo_lens({Int(-b), Int(1)}, order);
            ok = ok && s == lmo_lens({Int(b), Int(1)}, order).mirrored();
        }
        add("orientation: S^3(b;) presents the lens space L(-b, 1)", ok);
    }
    {
        bool ok = true;
        double worst = 0;
        for (const SeifertData& d :
             {SeifertData{Int(1), {}},
              SeifertData{Int(1), {{Int(2), Int(1)}}},
              SeifertData{Int(0), {{Int(2), Int(1)}, {Int(3), Int(1)}}}}) {
            double series = eval_hbar_series(z_rest(d, 12), 0.1).value;
            double quad = z_rest_quadrature(d, 0.1).value;
            worst = std::max(worst, std::fabs(series - quad));
        }
        ok = worst < 1e-6;
        std::ostringstream det;
        det << "max deviation " << worst;
        add("quadrature form of z_rest matches the series at hbar = 0.1", ok, det.str());
    }
    {
        SeifertData d{Int(1), {{Int(2), Int(1)}}};
        double first = eval_hbar_series(lmo_seifert(d, 2), 0.1).est_error;
        double prev = first;
        bool ok = true;
        for (int o = 4; o <= 12; o += 2) {
            double est = eval_hbar_series(lmo_seifert(d, o), 0.1).est_error;
            ok = ok && est <= prev;
            prev = est;
        }
        ok = ok && prev < first;
        add("evaluation error estimate shrinks with truncation order", ok);
    }
    return out;
}

}  // namespace lmo
