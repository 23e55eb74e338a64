#include "lmo/reduced_element.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lmo;

namespace {

ReducedElement random_element(std::mt19937& rng, int sc, int hc, bool dominated) {
    std::uniform_int_distribution<int> numd(-5, 5), dend(1, 4);
    ReducedElement e(sc, hc);
    for (int m = 0; m <= sc; ++m)
        for (int k = dominated ? m : 0; k <= hc; ++k)
            e.coeff(m, k) = Rational(numd(rng), dend(rng));
    return e;
}

Rational odd_factorial(int m) {  // (2m+1)!
    Rational f = 1;
    for (int i = 2; i <= 2 * m + 1; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("construction and window bookkeeping") {
    ReducedElement e(3, 5);
    CHECK(e.s_cap() == 3);
    CHECK(e.hbar_cap() == 5);
    CHECK(e == ReducedElement(3, 5));
    CHECK_THROWS_AS(ReducedElement(-1, 2), std::invalid_argument);
    CHECK(ReducedElement::one(3, 5).coeff(0, 0) == 1);
    CHECK_THROWS_AS(ReducedElement::monomial(1, 4, 0, 3, 5), std::invalid_argument);
    CHECK(ReducedElement::monomial(1, 2, 3, 3, 5).s_support() == 2);
    CHECK(ReducedElement(3, 5).s_support() == 0);
    CHECK_THROWS_WITH(e.truncated(4, 5), "ReducedElement: cannot extend window");
    CHECK(e.truncated(2, 2).s_cap() == 2);
}

TEST_CASE("exp_strut lays out c^m/m! rows") {
    ReducedElement e = ReducedElement::exp_strut(rational(1, 2), 4, 2);
    Rational f = 1;
    for (int m = 0; m <= 4; ++m) {
        CHECK(e.coeff(m, 0) == f);
        CHECK(e.coeff(m, 1) == 0);
        f *= rational(1, 2) / Rational(m + 1);
    }
    CHECK(!e.is_hbar_dominated());
    CHECK(agree_on_overlap(elem_exp(ReducedElement::monomial(rational(1, 2), 1, 0, 4, 2)), e));
}

TEST_CASE("ring laws on the common window") {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        ReducedElement a = random_element(rng, 4, 4, false);
        ReducedElement b = random_element(rng, 4, 4, false);
        ReducedElement c = random_element(rng, 4, 4, false);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * ReducedElement::one(4, 4) == a);
    }
}

TEST_CASE("mixed windows take the minimum") {
    std::mt19937 rng(29);
    ReducedElement a = random_element(rng, 5, 3, false);
    ReducedElement b = random_element(rng, 3, 5, false);
    CHECK((a + b).s_cap() == 3);
    CHECK((a + b).hbar_cap() == 3);
    CHECK((a * b).s_cap() == 3);
    CHECK(agree_on_overlap(a * b, a.truncated(3, 3) * b.truncated(3, 3)));
}

TEST_CASE("inverse and powers") {
    std::mt19937 rng(31);
    for (int t = 0; t < 6; ++t) {
        ReducedElement a = random_element(rng, 4, 4, false);
        a.coeff(0, 0) = rational(3, 2);
        CHECK(a * elem_inv(a) == ReducedElement::one(4, 4));
        CHECK(elem_pow(a, 3) == a * a * a);
        CHECK(elem_pow(a, -2) == elem_inv(a * a));
        CHECK(elem_pow(a, 0) == ReducedElement::one(4, 4));
    }
    CHECK_THROWS_WITH(elem_inv(ReducedElement(2, 2)), "elem_inv: constant term is zero");
}

TEST_CASE("elem_exp") {
    std::mt19937 rng(37);
    ReducedElement a = random_element(rng, 3, 3, false);
    a.coeff(0, 0) = 0;
    ReducedElement b = random_element(rng, 3, 3, false);
    b.coeff(0, 0) = 0;
    ReducedElement neg(3, 3);
    for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 3; ++k) neg.coeff(m, k) = -a.coeff(m, k);
    CHECK(elem_exp(a) * elem_exp(neg) == ReducedElement::one(3, 3));
    CHECK(elem_exp(a + b) == elem_exp(a) * elem_exp(b));
    CHECK_THROWS_WITH(elem_exp(ReducedElement::one(2, 2)), "elem_exp: nonzero constant term");
}

TEST_CASE("scale_legs multiplies row m by alpha^2m") {
    std::mt19937 rng(41);
    ReducedElement a = random_element(rng, 4, 4, false);
    ReducedElement s = scale_legs(a, rational(2, 3));
    Rational f = 1;
    for (int m = 0; m <= 4; ++m) {
        for (int k = 0; k <= 4; ++k) CHECK(s.coeff(m, k) == f * a.coeff(m, k));
        f *= rational(4, 9);
    }
    ReducedElement b = random_element(rng, 4, 4, false);
    CHECK(scale_legs(a * b, rational(2, 3)) == s * scale_legs(b, rational(2, 3)));
    CHECK(scale_legs(a, 1) == a);
    CHECK(scale_legs(a, -1) == a);
    CHECK(scale_legs(scale_legs(a, rational(1, 2)), 2) == a);
}

TEST_CASE("mul_hbar is multiplication by a row-zero element") {
    std::mt19937 rng(43);
    ReducedElement a = random_element(rng, 4, 4, false);
    HbarSeries f(4);
    std::uniform_int_distribution<int> numd(-5, 5);
    for (int k = 0; k <= 4; ++k) f.coeff(k) = numd(rng);
    ReducedElement fe(4, 4);
    for (int k = 0; k <= 4; ++k) fe.coeff(0, k) = f[k];
    CHECK(mul_hbar(a, f) == a * fe);
}

TEST_CASE("hbar domination predicate") {
    const ReducedElement om = build_omega(8, 6);
    CHECK(om.is_hbar_dominated());
    CHECK(elem_inv(om).is_hbar_dominated());
    CHECK((om * om).is_hbar_dominated());
    CHECK(scale_legs(om, rational(5, 7)).is_hbar_dominated());
    CHECK(!ReducedElement::exp_strut(1, 8, 6).is_hbar_dominated());
    CHECK(!ReducedElement::monomial(1, 2, 1, 8, 6).is_hbar_dominated());
    CHECK(ReducedElement::monomial(1, 2, 2, 8, 6).is_hbar_dominated());
}

TEST_CASE("pair against a brute-force contraction") {
    std::mt19937 rng(47);
    for (int t = 0; t < 6; ++t) {
        ReducedElement a = random_element(rng, 5, 5, true);
        ReducedElement b = random_element(rng, 5, 5, false);
        HbarSeries p = pair(a, b);
        CHECK(p.order_cap() == 5);
        for (int k = 0; k <= 5; ++k) {
            Rational acc = 0;
            for (int m = 0; m <= 5; ++m)
                for (int j = 0; j <= k; ++j)
                    acc += odd_factorial(m) * a.coeff(m, j) * b.coeff(m, k - j);
            CHECK(p[k] == acc);
        }
        CHECK(pair(a, b) == pair(b, a));
    }
    ReducedElement nd = ReducedElement::exp_strut(1, 3, 3);
    CHECK_THROWS_WITH(pair(nd, nd), "pair: needs an hbar-dominated factor");
}

TEST_CASE("pair result window is the minimum of all four caps") {
    std::mt19937 rng(53);
    ReducedElement a = random_element(rng, 3, 6, true);
    ReducedElement b = random_element(rng, 5, 4, false);
    CHECK(pair(a, b).order_cap() == 3);
}

TEST_CASE("pair_gaussian consumes exp(c s) in closed form") {
    std::mt19937 rng(59);
    for (const Rational& c : {rational(1, 2), rational(-1, 3), Rational(2)}) {
        ReducedElement p = random_element(rng, 5, 5, true);
        CHECK(pair_gaussian(c, p) == pair(ReducedElement::exp_strut(c, 5, 5), p));
    }
    CHECK_THROWS_WITH(pair_gaussian(1, ReducedElement::exp_strut(1, 3, 3)),
                      "pair_gaussian: needs an hbar-dominated element");
}

TEST_CASE("fgi_1var is the bracket against exp(-s/(2 lambda))") {
    std::mt19937 rng(61);
    ReducedElement p = random_element(rng, 5, 5, true);
    CHECK(fgi_1var(p, rational(3, 2)) == pair_gaussian(rational(-1, 3), p));
    CHECK_THROWS_WITH(fgi_1var(p, 0), "fgi_1var: singular covariance");
}

TEST_CASE("glue_strut lowers s-degree with factor 2m(2m+1)") {
    ReducedElement m3 = ReducedElement::monomial(1, 3, 0, 4, 2);
    ReducedElement g = glue_strut(m3);
    CHECK(g.s_cap() == 3);
    CHECK(g.coeff(2, 0) == 42);  // 2*3*(2*3+1)
    ReducedElement m1 = ReducedElement::monomial(1, 1, 0, 2, 2);
    CHECK(glue_strut(m1).coeff(0, 0) == 6);  // 2*1*(2*1+1)
    CHECK_THROWS_AS(glue_strut(ReducedElement(0, 2)), std::invalid_argument);
}

TEST_CASE("hat: window bookkeeping and strut action") {
    const ReducedElement om = build_omega(14, 8);
    ReducedElement e = ReducedElement::exp_strut(rational(1, 2), 14, 8);
    ReducedElement h = hat(om, e);
    CHECK(h.s_cap() == 14 - om.s_support());
    CHECK(h.hbar_cap() == 8);
    // hat(1, B) = B
    CHECK(hat(ReducedElement::one(3, 8), e) == e.truncated(14, 8));
    // hat(c s^1, B) = c glue(B)
    ReducedElement op = ReducedElement::monomial(rational(1, 2), 1, 1, 3, 8);
    ReducedElement direct(13, 8);
    ReducedElement g = glue_strut(e);
    for (int m = 0; m <= 13; ++m)
        for (int k = 1; k <= 8; ++k) direct.coeff(m, k) = rational(1, 2) * g.coeff(m, k - 1);
    CHECK(hat(op, e) == direct);
    CHECK_THROWS_WITH(hat(e, om), "hat: operator not hbar-dominated");
    CHECK_THROWS_AS(hat(om, om.truncated(2, 8)), std::invalid_argument);
}

TEST_CASE("modified Bernoulli numbers") {
    auto b = modified_bernoulli(4);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == rational(1, 48));
    CHECK(b[1] == rational(-1, 5760));
    CHECK(b[2] == rational(1, 362880));
    CHECK(b[3] == rational(-1, 19353600));
    CHECK(modified_bernoulli(0).empty());
}

TEST_CASE("wheels element") {
    const ReducedElement om = build_omega(8, 8);
    Rational c = 1;
    for (int m = 0; m <= 8; ++m) {
        CHECK(om.coeff(m, m) == c);  // 1 / (2^m (2m+1)!)
        for (int k = 0; k <= 8; ++k)
            if (k != m) CHECK(om.coeff(m, k) == 0);
        c /= Rational(2) * Rational(2 * m + 2) * Rational(2 * m + 3);
    }
    CHECK(om.coeff(1, 1) == rational(1, 12));
    CHECK(om.coeff(2, 2) == rational(1, 480));
    CHECK(agree_on_overlap(build_omega_from_wheels(8, 8), om));
}

TEST_CASE("bracket of the wheels element with itself") {
    const ReducedElement om = build_omega(12, 12);
    HbarSeries p = pair(om, om);
    // sinh(hbar/2) / (hbar/2) = sum hbar^2m / (4^m (2m+1)!)
    const char* expect[] = {"1", "0", "1/24", "0", "1/1920", "0", "1/322560", "0",
                            "1/92897280", "0", "1/40874803200", "0", "1/25505877196800"};
    for (int k = 0; k <= 12; ++k) CHECK(to_string(p[k]) == expect[k]);
}
