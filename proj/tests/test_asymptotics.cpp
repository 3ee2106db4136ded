#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kpztail/asymptotics.hpp"

using namespace kpztail;

TEST_CASE("sqrt1p_pi2y_m1 is cancellation-free near 0") {
    CHECK(sqrt1p_pi2y_m1(0.0) == 0.0);
    double y = 1e-14;
    CHECK(sqrt1p_pi2y_m1(y) == doctest::Approx(M_PI * M_PI * y / 2.0).epsilon(1e-12));
    CHECK(sqrt1p_pi2y_m1(3.0 / (M_PI * M_PI)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rate function phi: zero, small-y quartic law, large-y growth") {
    CHECK(rate_phi(0.0) == 0.0);

    // phi(y) = y^3/12 + O(y^4) for small y (Tracy-Widom cube regime; the first
    // three Taylor terms vanish exactly in the q-form).
    for (double y : {1e-3, 1e-2}) {
        double lead = y * y * y / 12.0;
        CHECK(std::fabs(rate_phi(y) / lead - 1.0) <= 0.2 * y * 100);
        CHECK(rate_phi(y) > 0.0);
    }

    // large y: phi ~ (4/(15 pi)) y^{5/2}
    double y = 1e6;
    CHECK(rate_phi(y) == doctest::Approx((4.0 / (15.0 * M_PI)) * std::pow(y, 2.5)).epsilon(1e-2));
}

TEST_CASE("phi is convex and increasing on y > 0") {
    double prev = 0.0, prev_diff = 0.0;
    bool started = false;
    for (int i = 1; i <= 100; ++i) {
        double y = 0.05 * i;
        double v = rate_phi(y);
        CHECK(v > prev);
        double diff = v - prev;
        if (started) CHECK(diff >= prev_diff - 1e-12);
        prev = v;
        prev_diff = diff;
        started = true;
    }
}

TEST_CASE("theorem-level asymptotic at (s=10, T=1)") {
    auto b = log_q_asymptotic(Params(10.0, 1.0));
    CHECK(b.terms.size() == 2);
    CHECK(b["T2_phi"] == doctest::Approx(-rate_phi(10.0)).epsilon(1e-15));
    double q = sqrt1p_pi2y_m1(10.0);
    CHECK(b["sqrt_correction"] == doctest::Approx(-(1.0 + q) / 6.0).epsilon(1e-15));
    CHECK(b.total == doctest::Approx(b["T2_phi"] + b["sqrt_correction"]).epsilon(1e-15));
    CHECK(b.total < 0.0);
}

TEST_CASE("fixed-T expansion: frozen per-term values at (s=6, T=1)") {
    auto b = log_q_expansion_fixed_T(Params(6.0, 1.0));
    REQUIRE(b.terms.size() == 6);
    CHECK(b["s52"] == doctest::Approx(-7.485089).epsilon(1e-5));
    CHECK(b["s2"] == doctest::Approx(1.823781).epsilon(1e-5));
    CHECK(b["s32"] == doctest::Approx(-0.315999).epsilon(1e-4));
    CHECK(b["s1"] == doctest::Approx(0.041064).epsilon(1e-4));
    CHECK(b["s12_pi"] == doctest::Approx(-1.282550).epsilon(1e-5));
    CHECK(b["s12_pi5"] == doctest::Approx(-0.004002).epsilon(1e-3));
    CHECK(b.total == doctest::Approx(-7.222795).epsilon(1e-5));
}

TEST_CASE("fixed-T expansion agrees with the theorem form for small s T^{-2/3}") {
    // Both are expansions of the same function; they agree up to the dropped
    // O(s^0) orders when s T^{-2/3} is moderate.
    for (double T : {1.0, 8.0}) {
        Params p(4.0, T);
        double a = log_q_asymptotic(p).total;
        double b = log_q_expansion_fixed_T(p).total;
        CHECK(std::fabs(a - b) <= 0.30 * std::fabs(a));
    }
}

TEST_CASE("Tracy-Widom tail expansion") {
    auto b = tw_tail_expansion(6.0);
    CHECK(b["tw_cubic"] == doctest::Approx(-216.0 / 12.0).epsilon(1e-15));
    CHECK(b["tw_log"] == doctest::Approx(-std::log(6.0) / 8.0).epsilon(1e-15));
    CHECK(b["tw_const"] ==
          doctest::Approx(std::log(2.0) / 24.0 + kZetaPrimeMinusOne).epsilon(1e-15));
    CHECK(b.total == doctest::Approx(-18.360510).epsilon(1e-6));
}

TEST_CASE("naive estimate and crossover against the full rate function") {
    Params p(10.0, 1.0);
    CHECK(naive_estimate(p) ==
          doctest::Approx(-(4.0 / (15.0 * M_PI)) * std::pow(10.0, 2.5)).epsilon(1e-15));
    // In the deep T^{2/3}-scaling regime the naive estimate matches -T^2 phi.
    Params deep(1e5, 1.0);
    CHECK(std::fabs(naive_estimate(deep) / (-rate_phi(1e5)) - 1.0) <= 5e-2);
}

TEST_CASE("derivative asymptotics are consistent with d/ds, d/dT of -T^2 phi") {
    // 5x5 grid identity check: differentiate T^2 phi(s T^{-2/3}) in s and T
    // by high-order finite differences and compare with the closed forms
    // (dropping the lower-order correction terms, which are separate entries).
    for (double s : {4.0, 6.0, 9.0, 12.0, 16.0}) {
        for (double T : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            auto lead = [](double ss, double tt) {
                return -tt * tt * rate_phi(ss * std::pow(tt, -2.0 / 3.0));
            };
            double hs = 1e-4 * s;
            double fd_s = (lead(s + hs, T) - lead(s - hs, T)) / (2 * hs);
            auto ds = dlogq_ds_asymptotic(Params(s, T));
            double closed_s = ds["q3"] + ds["q2"];
            CHECK(std::fabs(fd_s - closed_s) <= 1e-8 * (1.0 + std::fabs(closed_s)));

            double ht = 1e-4 * T;
            double fd_t = (lead(s, T + ht) - lead(s, T - ht)) / (2 * ht);
            auto dt = dlogq_dT_asymptotic(Params(s, T));
            double closed_t = dt["q5"] + dt["q4"];
            CHECK(std::fabs(fd_t - closed_t) <= 1e-8 * (1.0 + std::fabs(closed_t)));
        }
    }
}

TEST_CASE("derivative asymptotics: signs and structure") {
    auto ds = dlogq_ds_asymptotic(Params(5.0, 1.0));
    REQUIRE(ds.terms.size() == 3);
    CHECK(ds.total < 0.0);
    auto dt = dlogq_dT_asymptotic(Params(6.0, 1.0));
    REQUIRE(dt.terms.size() == 3);
    CHECK(dt.total < 0.0);
}

TEST_CASE("tail bracket: validity, ordering, and dominance failure") {
    auto q_eval = [](double s, double T) { return log_q_asymptotic(Params(s, T)).total; };

    auto br = kpz_tail_bracket(Params(10.0, 1.0), 0.1, q_eval);
    CHECK(br.lower_A <= br.upper_B);
    CHECK(br.s_tilde == doctest::Approx(10.0 + 3.1 * std::log(10.0)).epsilon(1e-12));
    CHECK(br.lower_A == doctest::Approx(std::log(2.0) + q_eval(br.s_tilde, 1.0)).epsilon(1e-12));
    CHECK(br.upper_B == doctest::Approx(q_eval(10.0, 1.0) + 1.0).epsilon(1e-12));

    // bracket width grows no faster than s^{3/2} log s relative to the total
    double ref = 0.0;
    for (double s : {10.0, 30.0, 100.0}) {
        auto b = kpz_tail_bracket(Params(s, 1.0), 0.1, q_eval);
        double scaled = (b.upper_B - b.lower_A) / (std::pow(s, 1.5) * std::log(s));
        if (s == 10.0) ref = scaled;
        CHECK(scaled <= 10.0 * ref);
    }

    // near s = 1 the remainder e^{-s^{3+eps}} cannot be dominated
    CHECK_THROWS_AS(kpz_tail_bracket(Params(1.01, 1.0), 0.1, q_eval), DominanceNotEstablished);
}
