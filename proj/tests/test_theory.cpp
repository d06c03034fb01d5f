#include <cmath>

#include "covtree/error.hpp"
#include "covtree/theory.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covtree;

TEST_CASE("closed form hits hand-computed values") {
    // a^2 lambda (1 - lambda r^2) exp(-lambda r^2) at a=10, lambda=0.2, r=1.
    CHECK(expected_chi_2d(0.2, 1.0, 10.0) == doctest::Approx(13.099692049).epsilon(1e-9));
    CHECK(expected_chi_2d(1.0, 1.0, 10.0) == 0.0);  // exactly, in IEEE arithmetic
    CHECK(expected_chi_2d(0.0, 1.0, 10.0) == 0.0);
}

TEST_CASE("series and closed form agree in dimension 2") {
    for (double lambda : {0.05, 0.2, 0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 15.0}) {
        for (double r : {0.5, 1.0, 1.5}) {
            ChiParams p;
            p.lambda = lambda;
            p.r = r;
            p.side_a = 10.0;
            p.dim_d = 2;
            const double series = expected_chi_series(p);
            const double closed = expected_chi_2d(lambda, r, 10.0);
            // The alternating series cancels catastrophically for large
            // lambda r^2: partial sums peak near (x^2+x)e^x at x = lambda r^2,
            // and a relative epsilon of that peak is the best double
            // arithmetic can deliver.
            const double x = lambda * r * r;
            const double cancel =
                1e-14 * (10.0 / r) * (10.0 / r) * (x * x + x) * std::exp(x);
            const double tol = 1e-9 * std::max(1.0, std::fabs(closed)) + cancel;
            CHECK(std::fabs(series - closed) <= tol);
        }
    }
}

TEST_CASE("expectation peaks at lambda r^2 = (3 - sqrt(5)) / 2") {
    const double u_star = (3.0 - std::sqrt(5.0)) / 2.0;
    const double peak = expected_chi_2d(u_star, 1.0, 10.0);
    CHECK(peak > expected_chi_2d(u_star - 0.02, 1.0, 10.0));
    CHECK(peak > expected_chi_2d(u_star + 0.02, 1.0, 10.0));
}

TEST_CASE("series works away from dimension 2") {
    ChiParams p;
    p.lambda = 0.3;
    p.r = 1.0;
    p.side_a = 4.0;
    p.dim_d = 1;
    // d=1: -(a/r) sum_k (-lambda r)^k k / k! = a lambda exp(-lambda r).
    const double want = 4.0 * 0.3 * std::exp(-0.3);
    CHECK(expected_chi_series(p) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("series reports failure to converge under a tiny term budget") {
    ChiParams p;
    p.lambda = 50.0;
    p.r = 2.0;
    p.side_a = 10.0;
    p.dim_d = 2;
    p.series_terms = 4;
    CHECK_THROWS_AS(expected_chi_series(p), NumericError);
}

TEST_CASE("empirical chi of the fixtures") {
    CHECK(empirical_chi(fixtures::filled_triangle(), 1.0, 16) == 1);
    CHECK(empirical_chi(fixtures::hexagon(), 1.2, 16) == 0);
    CHECK(empirical_chi(fixtures::two_hexagons_bridged(), 1.2, 16) == -1);
}

TEST_CASE("parameter validation") {
    ChiParams p;
    p.lambda = -1.0;
    CHECK_THROWS_AS(expected_chi_series(p), ParameterError);
    p.lambda = 1.0;
    p.r = 0.0;
    CHECK_THROWS_AS(expected_chi_series(p), ParameterError);
    p.r = 1.0;
    p.dim_d = 0;
    CHECK_THROWS_AS(expected_chi_series(p), ParameterError);
    p.dim_d = 2;
    p.series_terms = 0;
    CHECK_THROWS_AS(expected_chi_series(p), ParameterError);
    CHECK_THROWS_AS(expected_chi_2d(1.0, -1.0, 10.0), ParameterError);
    CHECK_THROWS_AS(expected_chi_2d(1.0, 1.0, 0.0), ParameterError);
}
