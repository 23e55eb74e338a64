#include "lmo/invariants.hpp"
#include "lmo/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lmo;

namespace {

const SeifertData poincare{Int(-1), {{2, 1}, {3, 1}, {5, 1}}};

}  // namespace

TEST_CASE("validation") {
    CHECK_THROWS_WITH(lmo_lens({0, 1}, 4), "lens: p = 0");
    CHECK_THROWS_WITH(lmo_lens({4, 2}, 4), "lens: p, q not coprime");
    CHECK_THROWS_WITH(lmo_seifert({1, {{1, 1}}}, 4),
                      "seifert: p = 1 fiber (fold it into b)");
    CHECK_THROWS_WITH(lmo_seifert({1, {{-2, 1}}}, 4), "seifert: fiber needs p >= 2");
    CHECK_THROWS_WITH(lmo_seifert({1, {{3, 4}}}, 4), "seifert: fiber needs 0 < q < p");
    CHECK_THROWS_WITH(lmo_seifert({1, {{3, 0}}}, 4), "seifert: fiber needs 0 < q < p");
    CHECK_THROWS_WITH(lmo_seifert({1, {{4, 2}}}, 4), "seifert: fiber p, q not coprime");
    CHECK_THROWS_WITH(lmo_seifert({0, {}}, 4),
                      "seifert: e0 = 0, not a rational homology sphere");
    CHECK_THROWS_WITH(casson_walker({-1, {{2, 1}, {2, 1}}}),
                      "seifert: e0 = 0, not a rational homology sphere");
}

TEST_CASE("euler number and homology order") {
    CHECK(e0(poincare) == rational(1, 30));
    CHECK(h1_order(poincare) == 1);
    SeifertData d{1, {{2, 1}, {3, 2}}};
    CHECK(e0(d) == rational(13, 6));
    CHECK(h1_order(d) == 13);
    CHECK(h1_order({-2, {}}) == 2);
}

TEST_CASE("lens space series, frozen") {
    HbarSeries z = lmo_lens({25, 4}, 8);
    const char* expect[] = {"1",
                            "-12/25",
                            "46/625",
                            "24/15625",
                            "-16031/11718750",
                            "-1346/48828125",
                            "1437017/43945312500",
                            "421489/640869140625",
                            "-1258047859/1538085937500000"};
    for (int k = 0; k <= 8; ++k) CHECK(to_string(z[k]) == expect[k]);

    HbarSeries z21 = lmo_lens({2, 1}, 6);
    const char* expect21[] = {"1", "0", "-1/32", "0", "5/6144", "0", "-61/2949120"};
    for (int k = 0; k <= 6; ++k) CHECK(to_string(z21[k]) == expect21[k]);
}

TEST_CASE("lens space homeomorphisms") {
    CHECK(lmo_lens({25, 4}, 8) == lmo_lens({25, 9}, 8));
    CHECK(lmo_lens({7, 2}, 8) == lmo_lens({7, 9}, 8));
    CHECK(lmo_lens({7, 2}, 8) == lmo_lens({7, 4}, 8));  // 2 * 4 = 1 mod 7
    CHECK(lmo_lens({1, 0}, 6) == HbarSeries::constant(1, 6));
    CHECK(lmo_lens({1, 3}, 6) == HbarSeries::constant(1, 6));
    CHECK(lmo_lens({-1, 2}, 6) == HbarSeries::constant(1, 6));
    CHECK(lmo_lens({2, 1}, 8) == lmo_lens({-2, 1}, 8));  // this series is even
}

TEST_CASE("casson-walker") {
    CHECK(casson_walker(poincare) == -2);
    CHECK(casson_walker({1, {}}) == 0);  // S^3(1;) = S^3
    CHECK(casson_walker({3, {}}) == rational(1, 18));  // (1/12)(3 + 2/3 - 3)
    CHECK(casson_from_series(lmo_seifert(poincare, 6)) == -2);
    CHECK(casson_from_series(lmo_seifert({3, {}}, 6)) == rational(1, 18));
    CHECK_THROWS_AS(casson_from_series(HbarSeries::constant(1, 0)), std::invalid_argument);
}

TEST_CASE("poincare sphere series, frozen") {
    HbarSeries z = lmo_seifert(poincare, 6);
    const char* expect[] = {"1", "-6", "42", "-420", "5554", "-454684/5", "8856691/5"};
    for (int k = 0; k <= 6; ++k) CHECK(to_string(z[k]) == expect[k]);
}

TEST_CASE("seifert formulas agree") {
    for (const SeifertData& d :
         {poincare, SeifertData{1, {}}, SeifertData{-2, {{3, 2}}},
          SeifertData{2, {{2, 1}, {3, 1}, {5, 4}, {7, 3}}}, SeifertData{0, {{2, 1}, {3, 1}}}}) {
        HbarSeries z = lmo_seifert(d, 8);
        CHECK(z == lmo_seifert_alt(d, 8));
        CHECK(casson_from_series(z) == casson_walker(d));
    }
}

TEST_CASE("seifert with no fibers gives a lens space with reversed orientation") {
    for (int b : {2, 3, -3, 7}) {
        CHECK(lmo_seifert({b, {}}, 8) == lmo_lens({-b, 1}, 8));
        CHECK(lmo_seifert({b, {}}, 8) == lmo_lens({b, 1}, 8).mirrored());
    }
}

TEST_CASE("normalization constants") {
    HbarSeries plus = z_norm(1, 8), minus = z_norm(-1, 8);
    HbarSeries oo = sinh_half_series(8);
    CHECK(plus == series_inv(oo) * exp_linear(rational(-3, 4), 8));
    CHECK(minus == series_inv(oo) * exp_linear(rational(3, 4), 8));
    CHECK(plus.mirrored() == minus);
    CHECK_THROWS_AS(z_norm(2, 8), std::invalid_argument);
}

TEST_CASE("framed unknot pipelines") {
    for (long long f : {1LL, -1LL, 2LL, 3LL, -5LL}) {
        AarhusUnknot a = aarhus0_unknot(f, 8);
        CHECK(a.closed_form == a.via_integral);
    }
    CHECK(aarhus0_unknot(1, 8).closed_form == z_norm(1, 8));
    CHECK(aarhus0_unknot(-1, 8).closed_form == z_norm(-1, 8));
    CHECK_THROWS_WITH(aarhus0_unknot(0, 8), "aarhus0_unknot: framing 0 is not invertible");
}

TEST_CASE("z_rest") {
    HbarSeries oo = sinh_half_series(8);
    CHECK(z_rest({1, {}}, 8) == oo);
    CHECK(z_rest({-1, {{2, 1}, {3, 1}}}, 8) == oo);
    for (const SeifertData& d : {poincare, SeifertData{1, {{2, 1}, {3, 2}, {7, 5}}}}) {
        HbarSeries rest = z_rest(d, 8);
        CHECK(rest[0] == 1);
        CHECK(rest[1] == 0);
        CHECK(lmo_seifert(d, 8) ==
              series_inv(oo) * exp_linear(Rational(3) * casson_walker(d), 8) * rest);
    }
}

TEST_CASE("integral homology sphere parameters") {
    SeifertData d = ihs_parameters({2, 3, 5}, 1);
    CHECK(d.b == -1);
    REQUIRE(d.fibers.size() == 3);
    CHECK((d.fibers[0].p == 2 && d.fibers[0].q == 1));
    CHECK((d.fibers[1].p == 3 && d.fibers[1].q == 1));
    CHECK((d.fibers[2].p == 5 && d.fibers[2].q == 1));
    CHECK(e0(d) == rational(1, 30));
    CHECK(h1_order(d) == 1);

    SeifertData m = ihs_parameters({2, 3}, -1);
    CHECK(m.b == -1);
    CHECK(e0(m) == rational(-1, 6));

    CHECK(ihs_parameters({}, 1).b == 1);
    CHECK(ihs_parameters({}, -1).b == -1);

    SeifertData big = ihs_parameters({9, 11, 101}, -1);
    CHECK(e0(big) == frac(Int(-1), Int(9) * 11 * 101));
    CHECK(h1_order(big) == 1);

    CHECK_THROWS_WITH(ihs_parameters({2, 4}, 1),
                      "ihs_parameters: p_i not pairwise coprime, not an integral homology "
                      "sphere presentation");
    CHECK_THROWS_AS(ihs_parameters({1}, 1), std::domain_error);
    CHECK_THROWS_AS(ihs_parameters({2, 3}, 0), std::invalid_argument);
}

TEST_CASE("identity suite is green") {
    for (const auto& c : run_identity_suite(4)) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
