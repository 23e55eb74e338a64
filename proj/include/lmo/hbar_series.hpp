#pragma once

#include "lmo/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmo {

// Truncated power series in hbar with exact rational coefficients.
// A series carries the order through which its coefficients are meaningful
// (order_cap); coefficients beyond the cap are unknown, not zero.  Binary
// operations insist on equal caps -- align explicitly with truncated().
class HbarSeries {
public:
    explicit HbarSeries(int order_cap) : cap_(order_cap), c_(order_cap + 1) {
        if (order_cap < 0) throw std::invalid_argument("HbarSeries: negative order cap");
    }

    static HbarSeries constant(const Rational& value, int order_cap) {
        HbarSeries s(order_cap);
        s.c_[0] = value;
        return s;
    }

    static HbarSeries monomial(const Rational& value, int degree, int order_cap) {
        HbarSeries s(order_cap);
        if (degree < 0 || degree > order_cap)
            throw std::invalid_argument("HbarSeries: monomial degree outside cap");
        s.c_[degree] = value;
        return s;
    }

    int order_cap() const { return cap_; }

    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Rational& coeff(int k) { return c_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    HbarSeries truncated(int new_cap) const {
        if (new_cap > cap_) throw std::invalid_argument("HbarSeries: cannot extend cap");
        HbarSeries s(new_cap);
        for (int k = 0; k <= new_cap; ++k) s.c_[k] = c_[k];
        return s;
    }

    // hbar -> -hbar
    HbarSeries mirrored() const {
        HbarSeries s(cap_);
        for (int k = 0; k <= cap_; ++k) s.c_[k] = (k % 2 == 0) ? c_[k] : Rational(-c_[k]);
        return s;
    }

    friend bool operator==(const HbarSeries& a, const HbarSeries& b) = default;

private:
    int cap_;
    std::vector<Rational> c_;
};

inline void require_same_cap(const HbarSeries& a, const HbarSeries& b) {
    if (a.order_cap() != b.order_cap())
        throw std::invalid_argument("HbarSeries: order caps differ");
}

inline HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
    require_same_cap(a, b);
    HbarSeries r(a.order_cap());
    for (int k = 0; k <= a.order_cap(); ++k) r.coeff(k) = a[k] + b[k];
    return r;
}

inline HbarSeries operator-(const HbarSeries& a) {
    HbarSeries r(a.order_cap());
    for (int k = 0; k <= a.order_cap(); ++k) r.coeff(k) = -a[k];
    return r;
}

inline HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) { return a + (-b); }

inline HbarSeries series_mul(const HbarSeries& a, const HbarSeries& b) {
    require_same_cap(a, b);
    HbarSeries r(a.order_cap());
    for (int k = 0; k <= a.order_cap(); ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
        r.coeff(k) = acc;
    }
    return r;
}

inline HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) { return series_mul(a, b); }

inline HbarSeries operator*(const Rational& c, const HbarSeries& a) {
    HbarSeries r(a.order_cap());
    for (int k = 0; k <= a.order_cap(); ++k) r.coeff(k) = c * a[k];
    return r;
}

inline HbarSeries series_inv(const HbarSeries& a) {
    if (a[0] == 0) throw std::domain_error("series_inv: constant term is zero");
    HbarSeries r(a.order_cap());
    r.coeff(0) = Rational(1) / a[0];
    for (int k = 1; k <= a.order_cap(); ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r.coeff(k) = -acc / a[0];
    }
    return r;
}

inline HbarSeries series_exp(const HbarSeries& a) {
    if (a[0] != 0) throw std::domain_error("series_exp: nonzero constant term");
    const int n = a.order_cap();
    HbarSeries r = HbarSeries::constant(1, n);
    HbarSeries term = HbarSeries::constant(1, n);
    for (int k = 1; k <= n; ++k) {
        term = Rational(Int(1), Int(k)) * (term * a);
        r = r + term;
    }
    return r;
}

inline HbarSeries series_log(const HbarSeries& a) {
    if (a[0] != 1) throw std::domain_error("series_log: constant term is not 1");
    const int n = a.order_cap();
    HbarSeries u = a - HbarSeries::constant(1, n);
    HbarSeries r(n);
    HbarSeries pw = HbarSeries::constant(1, n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * u;
        Rational c(Int(k % 2 == 1 ? 1 : -1), Int(k));
        r = r + c * pw;
    }
    return r;
}

// exp(c * hbar) at the given cap; the workhorse for scalar prefactors.
inline HbarSeries exp_linear(const Rational& c, int order_cap) {
    if (order_cap == 0) return HbarSeries::constant(1, 0);
    return series_exp(HbarSeries::monomial(c, 1, order_cap));
}

inline std::vector<std::string> to_strings(const HbarSeries& a) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(a.order_cap()) + 1);
    for (int k = 0; k <= a.order_cap(); ++k) out.push_back(to_string(a[k]));
    return out;
}

}  // namespace lmo
