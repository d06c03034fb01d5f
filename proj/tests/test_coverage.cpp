#include <cmath>

#include "covtree/coverage.hpp"
#include "covtree/error.hpp"
#include "covtree/kernels.hpp"
#include "covtree/spanning.hpp"
#include "doctest.h"

using namespace covtree;

TEST_CASE("single disk on the plane matches pi r^2 / a^2") {
    PointCloud cloud;
    cloud.geom = {10.0, Boundary::plane, Norm::euclidean};
    cloud.push_back(5.0, 5.0);
    const std::size_t samples = 200000;
    const CoverageEstimate est = covered_area(cloud, 1.0, samples, 17);
    const double want = std::acos(-1.0) / 100.0;
    const double sigma = std::sqrt(want * (1.0 - want) / samples);
    CHECK(est.sample_count == samples);
    CHECK(est.disk_radius == 1.0);
    CHECK(std::fabs(est.covered_fraction - want) < 3.0 * sigma);
    CHECK(est.standard_error() == doctest::Approx(sigma).epsilon(0.05));
}

TEST_CASE("single uniform-norm disk on the torus covers a square") {
    PointCloud cloud;
    cloud.geom = {10.0, Boundary::torus, Norm::uniform};
    cloud.push_back(0.5, 9.5);  // near the corner: wrap must apply
    const std::size_t samples = 200000;
    const CoverageEstimate est = covered_area(cloud, 1.0, samples, 23);
    const double want = 4.0 / 100.0;
    const double sigma = std::sqrt(want * (1.0 - want) / samples);
    CHECK(std::fabs(est.covered_fraction - want) < 3.0 * sigma);
}

TEST_CASE("grid path equals flat path on the same geometry") {
    // Duplicating every point pushes the count over the flat-scan limit and
    // onto the cell grid without changing the covered region or the probes.
    const PointCloud base = sample_binomial(70, 10.0, Boundary::torus, Norm::euclidean, 5);
    PointCloud doubled = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
        doubled.push_back(base.xs[i], base.ys[i]);
    }
    REQUIRE(doubled.size() > 128);
    const CoverageEstimate flat = covered_area(base, 1.3, 40000, 9);
    const CoverageEstimate grid = covered_area(doubled, 1.3, 40000, 9);
    CHECK(flat.covered_fraction == grid.covered_fraction);
}

TEST_CASE("plane boundary does not wrap coverage") {
    PointCloud corner;
    corner.geom = {10.0, Boundary::plane, Norm::euclidean};
    corner.push_back(0.0, 0.0);
    // A quarter disk: pi/4 of the full area fraction.
    const std::size_t samples = 200000;
    const CoverageEstimate est = covered_area(corner, 2.0, samples, 41);
    const double want = std::acos(-1.0) * 4.0 / 4.0 / 100.0;
    const double sigma = std::sqrt(want * (1.0 - want) / samples);
    CHECK(std::fabs(est.covered_fraction - want) < 3.0 * sigma);
}

TEST_CASE("coverage estimates are deterministic in the seed") {
    const PointCloud cloud = sample_binomial(90, 10.0, Boundary::plane, Norm::euclidean, 2);
    const CoverageEstimate a = covered_area(cloud, 1.25, 30000, 77);
    const CoverageEstimate b = covered_area(cloud, 1.25, 30000, 77);
    CHECK(a.covered_fraction == b.covered_fraction);
}

TEST_CASE("backends agree on coverage") {
    namespace kn = covtree::kernels;
    if (!kn::avx2_supported()) return;
    const kn::Backend prev = kn::active_backend();
    const PointCloud cloud = sample_binomial(100, 10.0, Boundary::torus, Norm::uniform, 8);
    kn::set_backend(kn::Backend::scalar);
    const CoverageEstimate s = covered_area(cloud, 1.0, 50000, 3);
    kn::set_backend(kn::Backend::avx2);
    const CoverageEstimate v = covered_area(cloud, 1.0, 50000, 3);
    kn::set_backend(prev);
    CHECK(s.covered_fraction == v.covered_fraction);
}

TEST_CASE("losing tree vertices can only shrink coverage") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const PointCloud cloud =
            sample_binomial(60, 10.0, Boundary::plane, Norm::euclidean, seed);
        const Tree t = build_tree(cloud, 2.5, WeightMetric::min_distance, std::nullopt, seed);
        const CoverageComparison cmp = coverage_loss(cloud, t, 1.25, 20000, seed);
        CHECK(cmp.after.covered_fraction <= cmp.before.covered_fraction);
        CHECK(cmp.relative_loss() >= 0.0);
        CHECK(cmp.absolute_loss() ==
              cmp.before.covered_fraction - cmp.after.covered_fraction);
        const CoverageEstimate direct = covered_area(cloud, 1.25, 20000, seed);
        CHECK(cmp.before.covered_fraction == direct.covered_fraction);
    }
}

TEST_CASE("empty cloud covers nothing") {
    PointCloud empty;
    empty.geom.side = 10.0;
    const CoverageEstimate est = covered_area(empty, 1.0, 500, 1);
    CHECK(est.covered_fraction == 0.0);
    CHECK(est.sample_count == 500);
}

TEST_CASE("coverage input validation") {
    const PointCloud cloud = sample_binomial(5, 10.0, Boundary::plane, Norm::euclidean, 1);
    CHECK_THROWS_AS(covered_area(cloud, 0.0, 100, 1), ParameterError);
    CHECK_THROWS_AS(covered_area(cloud, -1.0, 100, 1), ParameterError);
    CHECK_THROWS_AS(covered_area(cloud, 1.0, 0, 1), ParameterError);
}

TEST_CASE("relative loss guards a zero baseline") {
    CoverageComparison cmp;
    cmp.before.covered_fraction = 0.0;
    cmp.after.covered_fraction = 0.0;
    CHECK(cmp.relative_loss() == 0.0);
    cmp.before.covered_fraction = 0.5;
    cmp.after.covered_fraction = 0.4;
    CHECK(cmp.relative_loss() == doctest::Approx(0.2));
}
