#pragma once

#include "lmo/hbar_series.hpp"
#include "lmo/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lmo {

// Element of Q[[hbar, s]] truncated to the window s-degree <= s_cap,
// hbar-degree <= hbar_cap.  Entries outside the window are unknown, not
// zero; every operation below returns the window on which its output is
// valid (degree-lowering operators shrink it).
class ReducedElement {
public:
    ReducedElement(int s_cap, int hbar_cap)
        : s_cap_(s_cap),
          hbar_cap_(hbar_cap),
          c_(static_cast<std::size_t>(s_cap + 1),
             std::vector<Rational>(static_cast<std::size_t>(hbar_cap + 1))) {
        if (s_cap < 0 || hbar_cap < 0)
            throw std::invalid_argument("ReducedElement: negative cap");
    }

    static ReducedElement one(int s_cap, int hbar_cap) {
        ReducedElement e(s_cap, hbar_cap);
        e.c_[0][0] = 1;
        return e;
    }

    // c * s^m hbar^k within the window.
    static ReducedElement monomial(const Rational& c, int m, int k, int s_cap, int hbar_cap) {
        ReducedElement e(s_cap, hbar_cap);
        if (m < 0 || m > s_cap || k < 0 || k > hbar_cap)
            throw std::invalid_argument("ReducedElement: monomial outside window");
        e.c_[m][k] = c;
        return e;
    }

    // exp(c s) = sum_m c^m s^m / m!  (all at hbar-degree 0; not dominated).
    static ReducedElement exp_strut(const Rational& c, int s_cap, int hbar_cap) {
        ReducedElement e(s_cap, hbar_cap);
        Rational t = 1;
        for (int m = 0; m <= s_cap; ++m) {
            e.c_[m][0] = t;
            t = t * c / Rational(m + 1);
        }
        return e;
    }

    int s_cap() const { return s_cap_; }
    int hbar_cap() const { return hbar_cap_; }

    const Rational& coeff(int m, int k) const {
        return c_.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k));
    }
    Rational& coeff(int m, int k) {
        return c_.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k));
    }

    // c[m][k] = 0 whenever k < m: each s-degree enters at hbar-degree >= m,
    // which is what keeps pairings and hat() finite order by order.
    bool is_hbar_dominated() const {
        for (int m = 1; m <= s_cap_; ++m)
            for (int k = 0; k < std::min(m, hbar_cap_ + 1); ++k)
                if (c_[m][k] != 0) return false;
        return true;
    }

    // Largest s-degree with a nonzero row inside the window.
    int s_support() const {
        for (int m = s_cap_; m >= 0; --m)
            for (int k = 0; k <= hbar_cap_; ++k)
                if (c_[m][k] != 0) return m;
        return 0;
    }

    ReducedElement truncated(int s_cap, int hbar_cap) const {
        if (s_cap > s_cap_ || hbar_cap > hbar_cap_)
            throw std::invalid_argument("ReducedElement: cannot extend window");
        ReducedElement e(s_cap, hbar_cap);
        for (int m = 0; m <= s_cap; ++m)
            for (int k = 0; k <= hbar_cap; ++k) e.c_[m][k] = c_[m][k];
        return e;
    }

    friend bool operator==(const ReducedElement&, const ReducedElement&) = default;

private:
    int s_cap_, hbar_cap_;
    std::vector<std::vector<Rational>> c_;
};

// Equality on the intersection of the two validity windows.
inline bool agree_on_overlap(const ReducedElement& a, const ReducedElement& b) {
    int sc = std::min(a.s_cap(), b.s_cap());
    int hc = std::min(a.hbar_cap(), b.hbar_cap());
    for (int m = 0; m <= sc; ++m)
        for (int k = 0; k <= hc; ++k)
            if (a.coeff(m, k) != b.coeff(m, k)) return false;
    return true;
}

inline ReducedElement operator+(const ReducedElement& a, const ReducedElement& b) {
    ReducedElement r(std::min(a.s_cap(), b.s_cap()), std::min(a.hbar_cap(), b.hbar_cap()));
    for (int m = 0; m <= r.s_cap(); ++m)
        for (int k = 0; k <= r.hbar_cap(); ++k) r.coeff(m, k) = a.coeff(m, k) + b.coeff(m, k);
    return r;
}

// Product on the common window; factors are truncated first, so the result
// never extrapolates beyond the smaller window.
inline ReducedElement elem_mul(const ReducedElement& a, const ReducedElement& b) {
    ReducedElement r(std::min(a.s_cap(), b.s_cap()), std::min(a.hbar_cap(), b.hbar_cap()));
    for (int m = 0; m <= r.s_cap(); ++m)
        for (int k = 0; k <= r.hbar_cap(); ++k) {
            Rational acc = 0;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= k; ++j) acc += a.coeff(i, j) * b.coeff(m - i, k - j);
            r.coeff(m, k) = acc;
        }
    return r;
}

inline ReducedElement operator*(const ReducedElement& a, const ReducedElement& b) {
    return elem_mul(a, b);
}

inline ReducedElement elem_inv(const ReducedElement& a) {
    if (a.coeff(0, 0) == 0) throw std::domain_error("elem_inv: constant term is zero");
    ReducedElement r(a.s_cap(), a.hbar_cap());
    r.coeff(0, 0) = Rational(1) / a.coeff(0, 0);
    for (int m = 0; m <= a.s_cap(); ++m)
        for (int k = 0; k <= a.hbar_cap(); ++k) {
            if (m == 0 && k == 0) continue;
            Rational acc = 0;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= k; ++j) {
                    if (i == 0 && j == 0) continue;
                    acc += a.coeff(i, j) * r.coeff(m - i, k - j);
                }
            r.coeff(m, k) = -acc / a.coeff(0, 0);
        }
    return r;
}

inline ReducedElement elem_pow(const ReducedElement& a, int n) {
    if (n < 0) return elem_pow(elem_inv(a), -n);
    ReducedElement r = ReducedElement::one(a.s_cap(), a.hbar_cap());
    ReducedElement base = a;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r = elem_mul(r, base);
        if (e > 1) base = elem_mul(base, base);
    }
    return r;
}

// exp of an element with zero constant term.
inline ReducedElement elem_exp(const ReducedElement& a) {
    if (a.coeff(0, 0) != 0) throw std::domain_error("elem_exp: nonzero constant term");
    ReducedElement r = ReducedElement::one(a.s_cap(), a.hbar_cap());
    ReducedElement term = ReducedElement::one(a.s_cap(), a.hbar_cap());
    const int steps = a.s_cap() + a.hbar_cap();  // total valuation of a^j is >= j
    for (int j = 1; j <= steps; ++j) {
        term = elem_mul(term, a);
        ReducedElement scaled(term.s_cap(), term.hbar_cap());
        Rational inv_fact = Rational(1);
        for (int i = 1; i <= j; ++i) inv_fact /= Rational(i);
        for (int m = 0; m <= term.s_cap(); ++m)
            for (int k = 0; k <= term.hbar_cap(); ++k)
                scaled.coeff(m, k) = inv_fact * term.coeff(m, k);
        r = r + scaled;
    }
    return r;
}

// Leg rescaling x -> alpha x: the s-degree-m row picks up alpha^(2m).
inline ReducedElement scale_legs(const ReducedElement& a, const Rational& alpha) {
    ReducedElement r(a.s_cap(), a.hbar_cap());
    Rational f = 1;
    for (int m = 0; m <= a.s_cap(); ++m) {
        for (int k = 0; k <= a.hbar_cap(); ++k) r.coeff(m, k) = f * a.coeff(m, k);
        f *= alpha * alpha;
    }
    return r;
}

// Multiply every row by an hbar-series (a scalar of the s-grading).
inline ReducedElement mul_hbar(const ReducedElement& a, const HbarSeries& f) {
    ReducedElement r(a.s_cap(), a.hbar_cap());
    const int fc = f.order_cap();
    for (int m = 0; m <= a.s_cap(); ++m)
        for (int k = 0; k <= a.hbar_cap(); ++k) {
            Rational acc = 0;
            for (int j = 0; j <= std::min(k, fc); ++j) acc += f[j] * a.coeff(m, k - j);
            r.coeff(m, k) = acc;
        }
    return r;
}

// <a, b> with <s^m, s^m> = (2m+1)!.  Needs one hbar-dominated factor so each
// hbar-order receives finitely many contributions; the result is valid
// through min(caps) of everything in sight.
inline HbarSeries pair(const ReducedElement& a, const ReducedElement& b) {
    if (!a.is_hbar_dominated() && !b.is_hbar_dominated())
        throw std::domain_error("pair: needs an hbar-dominated factor");
    const int cap = std::min(std::min(a.hbar_cap(), b.hbar_cap()), std::min(a.s_cap(), b.s_cap()));
    HbarSeries r(cap);
    Rational fact = 1;  // (2m+1)!
    for (int m = 0; m <= std::min(a.s_cap(), b.s_cap()); ++m) {
        if (m > 0) fact *= Rational(2 * m) * Rational(2 * m + 1);
        for (int k = 0; k <= cap; ++k) {
            Rational acc = 0;
            for (int j = 0; j <= k; ++j) acc += a.coeff(m, j) * b.coeff(m, k - j);
            r.coeff(k) += fact * acc;
        }
    }
    return r;
}

// <exp(c s), P> = sum_m (2m+1)! c^m / m! row_m(P): the Gaussian side is
// consumed in closed form and never materialized.
inline HbarSeries pair_gaussian(const Rational& c, const ReducedElement& p) {
    if (!p.is_hbar_dominated())
        throw std::domain_error("pair_gaussian: needs an hbar-dominated element");
    const int cap = std::min(p.hbar_cap(), p.s_cap());
    HbarSeries r(cap);
    Rational f = 1;  // (2m+1)! c^m / m!
    for (int m = 0; m <= p.s_cap(); ++m) {
        if (m > 0) f *= Rational(2 * m) * Rational(2 * m + 1) * c / Rational(m);
        for (int k = 0; k <= cap; ++k) r.coeff(k) += f * p.coeff(m, k);
    }
    return r;
}

// Formal Gaussian integral in one variable: int P exp(lambda s / 2) dx,
// i.e. the bracket against exp(-(1/(2 lambda)) s).
inline HbarSeries fgi_1var(const ReducedElement& p, const Rational& lambda) {
    if (lambda == 0) throw std::domain_error("fgi_1var: singular covariance");
    return pair_gaussian(Rational(-1) / (2 * lambda), p);
}

// Adjoint of multiplication by s: s^m -> 2m(2m+1) s^(m-1).  Consumes one
// unit of s-window.
inline ReducedElement glue_strut(const ReducedElement& a) {
    if (a.s_cap() < 1) throw std::invalid_argument("glue_strut: no s window left");
    ReducedElement r(a.s_cap() - 1, a.hbar_cap());
    for (int m = 0; m < a.s_cap(); ++m) {
        Rational f = Rational(2 * (m + 1)) * Rational(2 * m + 3);
        for (int k = 0; k <= a.hbar_cap(); ++k) r.coeff(m, k) = f * a.coeff(m + 1, k);
    }
    return r;
}

// hat(A, B) = sum_m rowpoly_m(A) glue_strut^m(B): the gluing operator of A
// acting on B.  A must be hbar-dominated (rows beyond the hbar window then
// cannot touch it), and B needs s-window headroom for A's s-support.
inline ReducedElement hat(const ReducedElement& a, const ReducedElement& b) {
    if (!a.is_hbar_dominated()) throw std::domain_error("hat: operator not hbar-dominated");
    const int support = a.s_support();
    if (b.s_cap() < support) throw std::invalid_argument("hat: insufficient s window");
    ReducedElement r(b.s_cap() - support, std::min(a.hbar_cap(), b.hbar_cap()));
    ReducedElement g = b;
    for (int m = 0; m <= support; ++m) {
        for (int mm = 0; mm <= r.s_cap(); ++mm)
            for (int k = 0; k <= r.hbar_cap(); ++k) {
                Rational acc = 0;
                for (int j = 0; j <= k; ++j) acc += a.coeff(m, j) * g.coeff(mm, k - j);
                r.coeff(mm, k) += acc;
            }
        if (m < support) g = glue_strut(g);
    }
    return r;
}

// Modified Bernoulli numbers b_2, b_4, ..., b_{2M}: coefficients of x^{2m}
// in (1/2) log( sinh(x/2) / (x/2) ).  Computed in the variable w = x^2.
inline std::vector<Rational> modified_bernoulli(int M) {
    if (M < 0) throw std::invalid_argument("modified_bernoulli: negative order");
    HbarSeries f(M);  // sum_m w^m / (4^m (2m+1)!)
    Rational c = 1;
    for (int m = 0; m <= M; ++m) {
        f.coeff(m) = c;
        c /= Rational(4) * Rational(2 * m + 2) * Rational(2 * m + 3);
    }
    HbarSeries l = series_log(f);
    std::vector<Rational> b(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) b[static_cast<std::size_t>(m - 1)] = l[m] / 2;
    return b;
}

// Omega = sum_m hbar^m s^m / (2^m (2m+1)!), the wheels element.
inline ReducedElement build_omega(int s_cap, int hbar_cap) {
    ReducedElement e(s_cap, hbar_cap);
    Rational c = 1;
    for (int m = 0; m <= s_cap; ++m) {
        if (m <= hbar_cap) e.coeff(m, m) = c;
        c /= Rational(2) * Rational(2 * m + 2) * Rational(2 * m + 3);
    }
    return e;
}

// The same element assembled the long way round: exp of the wheel sum
// sum_m b_{2m} w_{2m} with w_{2m} = 2 (2 hbar s)^m.
inline ReducedElement build_omega_from_wheels(int s_cap, int hbar_cap) {
    const int M = std::min(s_cap, hbar_cap);
    std::vector<Rational> b = modified_bernoulli(M);
    ReducedElement x(s_cap, hbar_cap);
    Rational pw = 1;  // 2^m
    for (int m = 1; m <= M; ++m) {
        pw *= 2;
        x.coeff(m, m) = Rational(2) * b[static_cast<std::size_t>(m - 1)] * pw;
    }
    return elem_exp(x);
}

}  // namespace lmo
