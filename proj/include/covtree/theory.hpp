#pragma once

#include <cstddef>
#include <cstdint>

#include "covtree/geometry.hpp"

namespace covtree {

/// Parameters of the expected-Euler-characteristic series for a Poisson
/// cloud of intensity lambda on a d-dimensional torus of side side_a under
/// the uniform norm.
struct ChiParams {
    double lambda = 0.0;
    double r = 1.0;
    double side_a = 10.0;
    unsigned dim_d = 2;
    std::size_t series_terms = 64;
};

/// -(a/r)^d sum_{k>=1} (-lambda r^d)^k k^d / k!, summed through at least
/// series_terms terms and then until the next term's magnitude drops below
/// 1e-12 times max(|partial sum|, 1). Terms follow the ratio recurrence, so
/// no explicit factorial or power ever overflows. Fails with a numeric error
/// if the sum has not settled after ten times series_terms terms.
double expected_chi_series(const ChiParams& p);

/// Closed form of the same expectation in dimension 2:
/// a^2 lambda (1 - lambda r^2) e^{-lambda r^2}. Positive below lambda r^2 =
/// 1, exactly zero there, negative above.
double expected_chi_2d(double lambda, double r, double side_a);

/// Euler characteristic of one realization: alternating sum of the full
/// simplex counts. Propagates the clique size-cap resource error.
std::int64_t empirical_chi(const PointCloud& cloud, double r, std::size_t size_cap);

}  // namespace covtree
