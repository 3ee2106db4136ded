#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "kpztail/dd.hpp"
#include "kpztail/errors.hpp"
#include "kpztail/logdet.hpp"
#include "kpztail/quadrature.hpp"

using namespace kpztail;

TEST_CASE("gauss_legendre basics") {
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);

    auto r1 = gauss_legendre(1);
    CHECK(std::fabs(r1.nodes[0]) <= 1e-15);
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    auto r2 = gauss_legendre(2);
    CHECK(r2.nodes[1] == doctest::Approx(0.5773502691896258).epsilon(1e-15));
    CHECK(r2.nodes[0] == doctest::Approx(-0.5773502691896258).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauss_legendre weight sum, symmetry, and degree-38 exactness") {
    auto r = gauss_legendre(20);
    double wsum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        wsum += r.weights[i];
        CHECK(r.weights[i] > 0.0);
        CHECK(std::fabs(r.nodes[i] + r.nodes[r.size() - 1 - i]) <= 1e-15);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));

    double v = r.integrate([](double x) { return std::pow(x, 38); });
    CHECK(std::fabs(v / (2.0 / 39.0) - 1.0) <= 1e-14);
}

TEST_CASE("gauss_legendre exactness on random polynomials of degree <= 2n-1") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int n : {4, 9, 16}) {
        auto r = gauss_legendre(n);
        int deg = 2 * n - 1;
        std::vector<double> c(deg + 1);
        for (auto& x : c) x = coef(gen);
        auto poly = [&](double x) {
            double acc = 0.0;
            for (int k = deg; k >= 0; --k) acc = acc * x + c[k];
            return acc;
        };
        double exact = 0.0; // only even powers survive on [-1,1]
        for (int k = 0; k <= deg; k += 2) exact += 2.0 * c[k] / (k + 1);
        double v = r.integrate(poly);
        CHECK(std::fabs(v - exact) <= 1e-13 * (1.0 + std::fabs(exact)));
    }
}

TEST_CASE("map_rule: affine, half-line, window") {
    auto base = gauss_legendre(16);

    auto m1 = map_rule(base, DomainMap::affine(0.0, 2.0));
    CHECK(m1.integrate([](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-15));

    auto m2 = map_rule(base, DomainMap::affine(0.0, 1.0));
    CHECK(std::fabs(m2.integrate([](double x) { return std::exp(x); }) - (M_E - 1.0)) <= 1e-14);

    auto m3 = map_rule(gauss_legendre(60), DomainMap::half_line(0.0, 5.0));
    CHECK(std::fabs(m3.integrate([](double x) { return std::exp(-x); }) - 1.0) <= 1e-10);

    auto m4 = map_rule(base, DomainMap::window(1.0, 3.0));
    CHECK(m4.integrate([](double) { return 1.0; }) == doctest::Approx(3.0).epsilon(1e-14));

    CHECK_THROWS_AS(DomainMap::affine(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(DomainMap::half_line(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(DomainMap::window(0.0, 0.0), DomainError);
}

TEST_CASE("double-double arithmetic sanity") {
    DD two(2.0);
    DD r = sqrt(two);
    DD resid = r * r - two;
    CHECK(std::fabs(to_double(resid)) <= 1e-30);

    DD tiny = DD(1.0) + DD(1e-25);
    CHECK(to_double(tiny - DD(1.0)) == doctest::Approx(1e-25).epsilon(1e-10));

    DD s = dd_detail::two_sum(1.0, 1e-20);
    CHECK(s.hi == 1.0);
    CHECK(s.lo == 1e-20);
}

TEST_CASE("log_det_one_minus closed forms") {
    SymmetricMatrix z(3);
    CHECK(log_det_one_minus(z) == 0.0);

    SymmetricMatrix one(1);
    one.at(0, 0) = 0.5;
    CHECK(log_det_one_minus(one) == doctest::Approx(std::log(0.5)).epsilon(1e-15));

    SymmetricMatrix d(2);
    d.at(0, 0) = 0.1;
    d.at(1, 1) = 0.2;
    CHECK(log_det_one_minus(d) ==
          doctest::Approx(std::log(0.9) + std::log(0.8)).epsilon(1e-15));
}

TEST_CASE("log_det_one_minus against a frozen dense 5x5 PSD oracle") {
    // Random PSD contraction with top eigenvalue 0.9; reference value computed
    // with an independent LAPACK eigendecomposition.
    const double m[5][5] = {
        {0.324029193062083, -0.08618859317386476, -0.12043184446461502, 0.1398451865321053,
         -0.19022056076643817},
        {-0.08618859317386476, 0.493468585938705, -0.1686613717742478, -0.31809176468194866,
         -0.018939871212879787},
        {-0.12043184446461502, -0.1686613717742478, 0.5859914692671891, 0.10488562347341773,
         0.053742999103543125},
        {0.1398451865321053, -0.31809176468194866, 0.10488562347341773, 0.326846850883084,
         -0.18956834934081732},
        {-0.19022056076643817, -0.018939871212879787, 0.053742999103543125,
         -0.18956834934081732, 0.3860629121533629}};
    SymmetricMatrix M(5);
    SymmetricMatrixDD Mdd(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            M.at(i, j) = m[i][j];
            Mdd.at(i, j) = DD(m[i][j]);
        }
    const double ref = -4.1468040209809764;
    CHECK(std::fabs(log_det_one_minus(M) - ref) <= 1e-12);
    // precision-mode consistency
    CHECK(std::fabs(log_det_one_minus(Mdd) - log_det_one_minus(M)) <= 1e-12);
}

TEST_CASE("spectrum guard rejects eigenvalues outside [0,1)") {
    SymmetricMatrix hi(2);
    hi.at(0, 0) = 1.5;
    CHECK_THROWS_AS(log_det_one_minus(hi), SpectrumOutOfRange);

    SymmetricMatrix lo(2);
    lo.at(0, 0) = -0.1;
    CHECK_THROWS_AS(log_det_one_minus(lo), SpectrumOutOfRange);
}

TEST_CASE("graded_breaks produces a strictly increasing cover") {
    auto b = graded_breaks(-3.0, 5.0, {{0.0, 0.01}, {2.0, 0.05}});
    REQUIRE(b.size() >= 2);
    CHECK(b.front() == doctest::Approx(-3.0));
    CHECK(b.back() == doctest::Approx(5.0));
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
}

TEST_CASE("adaptive_integrate: smooth target and failure signalling") {
    double v = adaptive_integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-13);
    CHECK(std::fabs(v - 2.0) <= 1e-12);

    // Non-integrable endpoint behaviour cannot meet the tolerance at any depth.
    CHECK_THROWS_AS(
        adaptive_integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10, 20),
        QuadratureFailure);
}
