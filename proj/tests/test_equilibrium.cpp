#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kpztail/equilibrium.hpp"

using namespace kpztail;

TEST_CASE("potential V: value at 0, monotonicity, derivative consistency") {
    Params p(10.0, 1.0);
    // V(0) = -s^{-3/2} log 2
    CHECK(potential_v(0.0, p) ==
          doctest::Approx(-std::log(2.0) / std::pow(10.0, 1.5)).epsilon(1e-14));
    CHECK(potential_v(-1.0, p) > potential_v(0.0, p));
    CHECK(potential_v(0.0, p) > potential_v(1.0, p)); // V is decreasing

    double h = 1e-6;
    for (double lam : {-0.5, 0.0, 0.7}) {
        double fd = (potential_v(lam + h, p) - potential_v(lam - h, p)) / (2 * h);
        CHECK(std::fabs(fd - potential_v_prime(lam, p)) <= 1e-8);
    }
}

TEST_CASE("endpoint solves: residual, range, and monotonicity in T") {
    auto e1 = solve_lambda0(Params(10.0, 1.0));
    auto e2 = solve_lambda0(Params(10.0, 10.0));
    auto e3 = solve_lambda0(Params(100.0, 1.0));
    for (const auto& e : {e1, e2, e3}) {
        CHECK(e.residual <= 1e-12);
        CHECK(e.lambda0 < 1.0);
        CHECK(e.lambda0 > 0.0);
    }
    CHECK(e2.lambda0 < e1.lambda0); // larger T pushes the endpoint left

    // frozen self-consistent values
    CHECK(e1.lambda0 == doctest::Approx(0.819023604100).epsilon(1e-9));
    CHECK(e2.lambda0 == doctest::Approx(0.650843395717).epsilon(1e-9));
    CHECK(e3.lambda0 == doctest::Approx(0.93833499306241208).epsilon(1e-10));
}

TEST_CASE("re-solving with a different tolerance reproduces lambda0 to 1e-12") {
    auto a = solve_lambda0(Params(10.0, 1.0), 1e-12);
    auto b = solve_lambda0(Params(10.0, 1.0), 1e-9);
    CHECK(std::fabs(a.lambda0 - b.lambda0) <= 1e-12);
}

TEST_CASE("endpoint asymptotic expansion") {
    // Closed form is exact to O(s^{-5/2}); at (100,1) the gap is ~3e-4/ s-scaling.
    Params p(100.0, 1.0);
    auto e = solve_lambda0(p);
    CHECK(std::fabs(e.lambda0 - lambda0_asymptotic(p)) <= 5e-4);

    // Scaled error s^{5/2} T^{1/3} |lambda0 - asym| stays bounded as s grows.
    double ref = 0.0;
    for (double s : {100.0, 1000.0, 10000.0}) {
        Params q(s, 1.0);
        auto eq = solve_lambda0(q);
        double scaled = std::fabs(eq.lambda0 - lambda0_asymptotic(q)) * std::pow(s, 2.5);
        if (s == 100.0) ref = scaled;
        CHECK(scaled <= 10.0 * ref);
    }
}

TEST_CASE("psi dominates the square-root law") {
    for (auto [s, T] : {std::pair{10.0, 1.0}, std::pair{10.0, 10.0}, std::pair{100.0, 1.0}}) {
        auto eq = solve_lambda0(Params(s, T));
        for (int i = 0; i < 50; ++i) {
            double lam = -20.0 + (eq.lambda0 - 1e-6 + 20.0) * i / 49.0;
            CHECK(psi(lam, eq) >= 2.0 * std::sqrt(eq.lambda0 - lam) - 1e-10);
        }
    }
}

TEST_CASE("psi excess at lambda = 0 scales like T^{1/3}/sqrt(s)") {
    // (psi(0) - 2 sqrt(lambda0)) * sqrt(s)/T^{1/3} approaches a constant.
    double ref = 0.0;
    for (double s : {25.0, 100.0, 400.0}) {
        auto eq = solve_lambda0(Params(s, 1.0));
        double c = (psi(0.0, eq) - 2.0 * std::sqrt(eq.lambda0)) * std::sqrt(s);
        if (s == 25.0) ref = c;
        CHECK(c > 0.0);
        CHECK(c <= 10.0 * ref);
    }
}

TEST_CASE("deep-left psi approaches the pure square root") {
    // The correction decays in |lambda| but carries an s^{-1/2} prefactor;
    // at (s=10, T=1, lambda=-50) it is ~2.6e-2.
    auto eq = solve_lambda0(Params(10.0, 1.0));
    double d50 = psi(-50.0, eq) - 2.0 * std::sqrt(eq.lambda0 + 50.0);
    double d10 = psi(-10.0, eq) - 2.0 * std::sqrt(eq.lambda0 + 10.0);
    CHECK(d50 > 0.0);
    CHECK(d50 <= 5e-2);
    CHECK(d50 < d10); // monotone decay of the correction
}

TEST_CASE("edge weight w: lower bound, psi consistency, large-s limit") {
    for (auto [s, T] : {std::pair{10.0, 1.0}, std::pair{10.0, 10.0}}) {
        auto eq = solve_lambda0(Params(s, T));
        CHECK(eq.w_at_endpoint >= 1.0);
        CHECK(w_at(eq.lambda0, eq) == doctest::Approx(eq.w_at_endpoint).epsilon(1e-12));
        // psi(lam) = 2 sqrt(lambda0 - lam) w(lam); the two sides come from
        // independent integral forms (log-kernel vs principal-value), so the
        // agreement degrades away from the endpoint.
        double near = eq.lambda0 - 0.5;
        CHECK(std::fabs(psi(near, eq) - 2.0 * std::sqrt(eq.lambda0 - near) * w_at(near, eq)) <=
              1e-6);
        double far = eq.lambda0 - 3.0;
        CHECK(std::fabs(psi(far, eq) - 2.0 * std::sqrt(eq.lambda0 - far) * w_at(far, eq)) <=
              1e-3);
    }
    auto big = solve_lambda0(Params(1e4, 1.0));
    CHECK(std::fabs(big.w_at_endpoint - 1.0) <= 1e-2);
}

TEST_CASE("g-combination: positivity, square-root lower bound, edge behaviour") {
    auto eq = solve_lambda0(Params(10.0, 1.0));
    for (double d : {0.1, 0.5, 1.0, 2.0}) {
        double lam = eq.lambda0 + d;
        double g = g_combination(lam, eq);
        CHECK(g >= (4.0 / 3.0) * std::pow(d, 1.5)); // since w >= 1
    }
    // Near the endpoint g ~ (4/3) w(lambda0) d^{3/2}.
    double d = 1e-3;
    double g = g_combination(eq.lambda0 + d, eq);
    double lead = (4.0 / 3.0) * eq.w_at_endpoint * std::pow(d, 1.5);
    CHECK(std::fabs(g / lead - 1.0) <= 2e-2);

    // d/dlam [2g - V + V(lambda0)] = 2 sqrt(lam-lambda0) w(lam) >= 2 sqrt(lam-lambda0).
    double lam = eq.lambda0 + 1.0;
    double h = 1e-5;
    double fd = (g_combination(lam + h, eq) - g_combination(lam - h, eq)) / (2 * h);
    CHECK(fd >= 2.0 * std::sqrt(lam - eq.lambda0) - 1e-6);
    CHECK(g_combination(eq.lambda0 + 2.0, eq) > g_combination(lam, eq));
}

TEST_CASE("step lemma: even test functions are exact, odd ones decay like r^-2") {
    auto even_f = [](double x) { return std::exp(-x * x); };
    double even_half = std::sqrt(M_PI) / 2.0;
    // sigma(r x) - 1_{x>0} is odd, so the error vanishes identically for even F.
    for (double r : {10.0, 100.0})
        CHECK(std::fabs(step_lemma_error(even_f, even_half, r)) <= 1e-12);

    // Odd-part test function: error = (pi^2/6) F'(0) / r^2 + O(r^-4).
    auto f = [](double x) { return std::exp(-x * x) * (1.0 + x); };
    double half = even_half + 0.5;
    double e10 = step_lemma_error(f, half, 10.0);
    double e100 = step_lemma_error(f, half, 100.0);
    double slope = std::log(e100 / e10) / std::log(10.0);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.1));
    CHECK(std::fabs(e100 * 100.0 * 100.0 - M_PI * M_PI / 6.0) <= 1e-2);

    // r -> infinity limit
    CHECK(step_lemma_error(f, half, 1000.0) <= 1e-5);
}
