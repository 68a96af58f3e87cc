#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meandrics/exponents.hpp"
#include "meandrics/numeric.hpp"

#include <cmath>

using namespace meandrics;
using doctest::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("string susceptibility closed form") {
    CHECK(kpz_gamma(0.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(kpz_gamma(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(kpz_gamma(-4.0) ==
          Approx((-5.0 - std::sqrt(145.0)) / 12.0).epsilon(1e-15));
    CHECK(kpz_gamma(-4.0) == Approx(-1.42013).epsilon(1e-5));
    CHECK_THROWS_AS(kpz_gamma(1.0 + 1e-9), ValidationError);
}

TEST_CASE("dressed dimensions and the endpoint weight") {
    CHECK(dressed_dimension(0.0, 0.0) == Approx(0.0).epsilon(1e-15));
    CHECK(dressed_dimension(1.0, 0.0) ==
          Approx(4.0 / (std::sqrt(25.0) - 1.0)).epsilon(1e-15));
    CHECK(dressed_dimension(1.0, 0.0) == Approx(1.0).epsilon(1e-15));

    // The endpoint operator becomes marginal-free at e = 1/3 (p = 1), so
    // its dressed dimension vanishes for every central charge.
    CHECK(std::abs(endpoint_conformal_weight(1.0 / 3.0)) < 1e-15);
    for (double c : {-4.0, -2.0, 0.0, 0.5}) {
        CHECK(std::abs(dressed_dimension(
                  endpoint_conformal_weight(1.0 / 3.0), c)) < 1e-12);
    }

    CHECK_THROWS_AS(dressed_dimension(0.0, 1.5), ValidationError);
    CHECK_THROWS_AS(dressed_dimension(-1.0, 0.0), ValidationError);
}

TEST_CASE("exponents at the pure road-and-river point") {
    ExponentRecord rec = exponent_point(0.0, 0.0);
    CHECK(rec.e == Approx(0.5).epsilon(1e-14));
    CHECK(rec.f == Approx(0.5).epsilon(1e-14));
    CHECK(rec.c == Approx(-4.0).epsilon(1e-13));
    double alpha_closed =
        2.0 + std::sqrt(5.0) * (std::sqrt(5.0) + std::sqrt(29.0)) / 12.0;
    double alpha_bar_closed =
        1.0 + std::sqrt(11.0) * (std::sqrt(5.0) + std::sqrt(29.0)) / 24.0;
    CHECK(rec.alpha == Approx(alpha_closed).epsilon(1e-13));
    CHECK(rec.alpha_bar == Approx(alpha_bar_closed).epsilon(1e-13));
    CHECK(rec.alpha == Approx(3.4201328815660244).epsilon(1e-13));
    CHECK(rec.alpha_bar == Approx(2.0531987327744760).epsilon(1e-13));
    CHECK(rec.gamma == Approx((-5.0 - std::sqrt(145.0)) / 12.0)
                           .epsilon(1e-13));
}

TEST_CASE("exponents at unit weights and at the top corner") {
    ExponentRecord rec = exponent_point(1.0, 1.0);
    CHECK(rec.c == Approx(0.0).epsilon(1e-13));
    CHECK(rec.alpha == Approx(2.5).epsilon(1e-12));
    CHECK(rec.alpha_bar == Approx(1.5).epsilon(1e-12));

    ExponentRecord top = exponent_point(2.0, 2.0);
    CHECK(top.c == Approx(2.0).epsilon(1e-13));
    CHECK(top.alpha == Approx(2.0).epsilon(1e-13));
}

TEST_CASE("record stores consistent electric parameters") {
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            double q = 0.5 * i;
            double p = 0.5 * j;
            ExponentRecord rec = exponent_point(q, p);
            CHECK(rec.e >= 0.0);
            CHECK(rec.e <= 0.5);
            CHECK(rec.f >= 0.0);
            CHECK(rec.f <= 0.5);
            CHECK(2.0 * std::cos(kPi * rec.e) == Approx(p).epsilon(1e-12));
            CHECK(2.0 * std::cos(kPi * rec.f) == Approx(q).epsilon(1e-12));
            CHECK(rec.q == Approx(q).epsilon(1e-12));
            CHECK(rec.p == Approx(p).epsilon(1e-12));
        }
    }
}

TEST_CASE("one-river exponents agree along both formula routes") {
    for (int i = 0; i <= 20; ++i) {
        double q = 0.1 * i;
        ExponentRecord rec = exponent_point(q, 1.0);
        MultiRiverAsymptotics mr = multi_river(q);
        CHECK(std::abs(rec.alpha - mr.alpha) < 1e-10);
        // The endpoint dressing vanishes at p = 1 ...
        CHECK(std::abs(rec.alpha_bar - (rec.alpha - 1.0)) < 1e-10);
        // ... giving the closed forms (2-f)/(1-f) and 1/(1-f).
        CHECK(rec.alpha == Approx((2.0 - rec.f) / (1.0 - rec.f))
                               .epsilon(1e-10));
        CHECK(rec.alpha_bar == Approx(1.0 / (1.0 - rec.f)).epsilon(1e-10));
        CHECK(rec.r_q1 == Approx(mr.r).epsilon(1e-14));
    }
}

TEST_CASE("zero-river-weight exponents match their dense-phase forms") {
    for (double q : {0.0, 1.0, 2.0}) {
        ExponentRecord rec = exponent_point(q, 0.0);
        double f = rec.f;
        CHECK(rec.c ==
              Approx(2.0 - 6.0 * (0.5 + f * f / (1.0 - f))).epsilon(1e-12));
        // The shifted central charge of the dense one-color phase sits two
        // units above the two-color value.
        double ct = dense_loop_central_charge(q);
        CHECK(ct == Approx(rec.c + 2.0).epsilon(1e-12));
        double s1 = std::sqrt(1.0 - rec.c);
        double s25 = std::sqrt(25.0 - rec.c);
        CHECK(rec.alpha == Approx(2.0 + s1 * (s25 + s1) / 12.0)
                               .epsilon(1e-12));
        if (q < winding_transition()) {
            CHECK(rec.alpha_bar ==
                  Approx(1.0 +
                         std::sqrt(3.0 - 4.0 * ct) * (s25 + s1) / 24.0)
                      .epsilon(1e-10));
        } else {
            // Past the winding transition both the shifted-charge radicand
            // and the endpoint dressing radicand go negative: the open
            // exponent is no longer given by these formulas.
            CHECK(3.0 - 4.0 * ct < 0.0);
            CHECK(std::isnan(rec.alpha_bar));
        }
    }
}

TEST_CASE("open exponent switches off exactly at the winding transition") {
    double qc = winding_transition();
    CHECK_FALSE(std::isnan(exponent_point(qc - 1e-6, 0.0).alpha_bar));
    CHECK(std::isnan(exponent_point(qc + 1e-6, 0.0).alpha_bar));
}

TEST_CASE("single-river asymptotic record") {
    MultiRiverAsymptotics one = multi_river(1.0);
    CHECK(one.r == Approx(4.5).epsilon(1e-14));
    CHECK(one.alpha == Approx(2.5).epsilon(1e-14));
    CHECK(one.x == Approx(2.0 / 9.0).epsilon(1e-14));
    CHECK(one.gamma == Approx(-0.5).epsilon(1e-14));

    MultiRiverAsymptotics zero = multi_river(0.0);
    CHECK(zero.r == Approx(4.0).epsilon(1e-14));
    CHECK(zero.alpha == Approx(3.0).epsilon(1e-14));

    MultiRiverAsymptotics two = multi_river(2.0);
    CHECK(two.r == Approx(kPi * kPi / 2.0).epsilon(1e-14));
    CHECK(two.alpha == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("series branch joins the closed form continuously") {
    double f_hi = 1.0001e-4;
    double f_lo = 0.9999e-4;
    double q_hi = 2.0 * std::cos(kPi * f_hi);
    double q_lo = 2.0 * std::cos(kPi * f_lo);
    double r_hi = multi_river(q_hi).r;
    double r_lo = multi_river(q_lo).r;
    CHECK(std::abs(r_hi - r_lo) / r_hi < 1e-10);
    CHECK(std::abs(multi_river(2.0 - 1e-10).r - kPi * kPi / 2.0) < 1e-9);
}

TEST_CASE("winding transition point") {
    double qc = winding_transition();
    CHECK(qc == Approx(1.6738493426802648).epsilon(1e-14));
    CHECK(std::abs(qc - 1.674) < 1e-3);
    CHECK(qc > 1.5);
    CHECK(qc < 2.0);
    CHECK(dense_loop_central_charge(qc) == Approx(0.75).epsilon(1e-10));
}

TEST_CASE("reference table rows carry exact forms and values") {
    auto rows = table_two();
    REQUIRE(rows.size() == 5);

    CHECK(rows[0].q_exact == "0");
    CHECK(rows[0].r == Approx(4.0).epsilon(1e-14));
    CHECK(rows[0].alpha == Approx(3.0).epsilon(1e-14));

    CHECK(rows[1].r == Approx(4.5).epsilon(1e-14));
    CHECK(rows[1].alpha == Approx(2.5).epsilon(1e-14));

    CHECK(rows[2].q_exact == "sqrt(2)");
    CHECK(rows[2].r_exact == "16-8*sqrt(2)");
    CHECK(rows[2].r == Approx(16.0 - 8.0 * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(rows[2].alpha == Approx(7.0 / 3.0).epsilon(1e-13));

    CHECK(rows[3].r_exact == "36-18*sqrt(3)");
    CHECK(rows[3].r == Approx(36.0 - 18.0 * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(rows[3].alpha == Approx(2.2).epsilon(1e-13));

    CHECK(rows[4].r_exact == "pi^2/2");
    CHECK(rows[4].r == Approx(kPi * kPi / 2.0).epsilon(1e-14));
    CHECK(rows[4].alpha == Approx(2.0).epsilon(1e-14));

    for (const auto& row : rows) {
        CHECK(row.f == Approx(std::acos(row.q / 2.0) / kPi).epsilon(1e-13));
        MultiRiverAsymptotics mr = multi_river(row.q);
        CHECK(row.r == Approx(mr.r).epsilon(1e-14));
        CHECK(row.alpha == Approx(mr.alpha).epsilon(1e-14));
    }
}

TEST_CASE("triangular folding entropy constant") {
    double s = baxter_folding_entropy();
    CHECK(s == Approx(0.18956004831636022).epsilon(1e-13));
    CHECK(s ==
          Approx(std::log(std::sqrt(3.0) / (2.0 * kPi)) +
                 1.5 * std::lgamma(1.0 / 3.0))
              .epsilon(1e-13));
}

TEST_CASE("weights outside the unit disc of validity are rejected") {
    CHECK_THROWS_AS(exponent_point(-0.1, 1.0), ValidationError);
    CHECK_THROWS_AS(exponent_point(1.0, 2.1), ValidationError);
    CHECK_THROWS_AS(multi_river(2.0001), ValidationError);
    CHECK_THROWS_AS(dense_loop_central_charge(-1.0), ValidationError);
    // Tiny numerical overshoot is clamped instead.
    CHECK(exponent_point(2.0 + 5e-13, 1.0).f == Approx(0.0));
    CHECK(multi_river(-5e-13).r == Approx(4.0).epsilon(1e-12));
}
