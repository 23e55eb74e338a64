#pragma once

#include "lmo/dedekind.hpp"
#include "lmo/rational.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace lmo {

// 2x2 integer matrix ((a, b), (c, d)).
struct Mat2 {
    Int a, b, c, d;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Int det() const { return a * d - b * c; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Generator of the continued-fraction evaluation.
inline Mat2 cfrac_generator(const Int& a) { return {a, -1, 1, 0}; }

// Result of evaluating an expansion: the matrix ((p, u), (q, v)), with the
// fraction it presents being p/q.  det = pv - uq = +-1.
struct CfracData {
    std::vector<Int> a;
    Int p, u, q, v;
};

// Product T(0) T(a1) ... T(al) applied to nothing: the matrix itself.
inline CfracData cfrac_eval(const std::vector<Int>& a) {
    if (a.empty()) throw std::invalid_argument("cfrac_eval: empty expansion");
    Mat2 m = cfrac_generator(0);
    for (const Int& ai : a) m = m * cfrac_generator(ai);
    return {a, m.a, m.b, m.c, m.d};
}

// Expansion of t = p/q into <a1,...,al> with <a1,...> = -1/(a1 + <a2,...>).
// Nearest-integer remainders keep the length logarithmic in the input.
// Padded with [0, 0] (which only flips the sign pair) so that l >= 2.
inline std::vector<Int> cfrac_expand(const Int& p, const Int& q) {
    if (q == 0) throw std::domain_error("cfrac_expand: q = 0");
    std::vector<Int> a;
    Rational t = frac(p, q);
    while (t != 0) {
        Rational x = Rational(-1) / t;
        Int ai = round_int(x);
        a.push_back(ai);
        t = x - Rational(ai);  // tail value <a2,...>, |t| <= 1/2
    }
    if (a.size() < 2) {
        a.push_back(0);
        a.push_back(0);
    }
    return a;
}

inline Int tau(const std::vector<Int>& a) {
    Int s = 0;
    for (const Int& ai : a) s += ai;
    return s;
}

// Signature of the tridiagonal matrix Lambda(a1..al) (diagonal a_i, unit
// off-diagonals) via the leading-principal-minor sequence d_k = a_k d_{k-1}
// - d_{k-2}.  A vanishing intermediate minor contributes one eigenvalue of
// each sign; two consecutive minors cannot vanish.  Requires det != 0.
inline int signature(const std::vector<Int>& a) {
    const int l = static_cast<int>(a.size());
    if (l == 0) throw std::invalid_argument("signature: empty diagonal");
    Int dprev = 1, d = a[0];
    int negatives = 0;
    int sprev = 1;  // sign of the last nonzero minor (d_0 = 1)
    for (int k = 1;; ++k) {
        if (d == 0) {
            negatives += 1;
            sprev = -sprev;
        } else if ((d > 0 ? 1 : -1) != sprev) {
            negatives += 1;
            sprev = -sprev;
        }
        if (k == l) break;
        Int dnext = a[k] * d - dprev;
        dprev = d;
        d = dnext;
    }
    if (d == 0) throw std::domain_error("signature: singular matrix");
    return l - 2 * negatives;
}

inline Int lambda_det(const std::vector<Int>& a) {
    Int dprev = 1, d = a.at(0);
    for (std::size_t k = 1; k < a.size(); ++k) {
        Int dnext = a[k] * d - dprev;
        dprev = d;
        d = dnext;
    }
    return d;
}

// Exact dense solve of M x = rhs by Gaussian elimination with pivot search.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m,
                                         std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_exact: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

struct Corners {
    Rational l11, l1l, lll;
};

// Corner entries of Lambda(a)^{-1}, both from the closed formulas
// (l11 = -p/q, l1l = (-1)^(l+1)/q, lll = -v/q) and from exact unit-vector
// solves; the two routes must agree.
inline Corners inverse_corners(const std::vector<Int>& a) {
    const std::size_t l = a.size();
    CfracData ev = cfrac_eval(a);
    if (ev.q == 0) throw std::domain_error("inverse_corners: singular matrix");
    Corners closed{frac(-ev.p, ev.q), frac(Int(l % 2 == 0 ? -1 : 1), ev.q),
                   frac(-ev.v, ev.q)};

    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l, Rational(0)));
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = Rational(a[i]);
        if (i + 1 < l) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    std::vector<Rational> e1(l, Rational(0)), el(l, Rational(0));
    e1[0] = 1;
    el[l - 1] = 1;
    auto x1 = solve_exact(m, e1);
    auto xl = solve_exact(m, el);
    Corners solved{x1[0], xl[0], xl[l - 1]};

    if (solved.l11 != closed.l11 || solved.l1l != closed.l1l || solved.lll != closed.lll)
        throw std::logic_error("inverse_corners: closed form disagrees with solve");
    return closed;
}

// S(p/q) evaluated through a surgery presentation:
// S = 3 sigma(Lambda) - tau + (p + v)/q with (p, v, q) from the evaluation.
inline Rational dedekind_via_surgery(const Int& p, const Int& q) {
    if (q == 0) throw std::domain_error("dedekind_via_surgery: q = 0");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw std::domain_error("dedekind_via_surgery: p, q not coprime");
    std::vector<Int> a = cfrac_expand(p, q);
    CfracData ev = cfrac_eval(a);
    return Rational(3 * signature(a)) - Rational(tau(a)) + frac(ev.p + ev.v, ev.q);
}

}  // namespace lmo
