#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "covtree/geometry.hpp"
#include "covtree/spanning.hpp"

namespace covtree {

/// Monte-Carlo estimate of the domain fraction covered by closed disks of
/// disk_radius around a point set.
struct CoverageEstimate {
    double covered_fraction = 0.0;
    std::size_t sample_count = 0;
    double disk_radius = 0.0;

    double standard_error() const {
        double f = covered_fraction;
        return std::sqrt(f * (1.0 - f) / static_cast<double>(sample_count));
    }
};

/// Fraction of `samples` uniform probe positions lying within disk_radius
/// (closed) of at least one point, under the cloud's boundary mode and norm.
/// Deterministic per seed; the probe stream depends only on the seed, so two
/// point sets probed with the same seed see identical probe positions.
CoverageEstimate covered_area(const PointCloud& points, double disk_radius,
                              std::size_t samples, std::uint64_t seed);

struct CoverageComparison {
    CoverageEstimate before;
    CoverageEstimate after;

    /// Coverage loss as a fraction of the before-coverage (0 when nothing
    /// was covered).
    double relative_loss() const {
        if (before.covered_fraction <= 0.0) return 0.0;
        return (before.covered_fraction - after.covered_fraction) / before.covered_fraction;
    }
    /// Coverage loss as a fraction of the whole domain.
    double absolute_loss() const {
        return before.covered_fraction - after.covered_fraction;
    }
};

/// Coverage of the full cloud versus the tree's member vertices only, probed
/// with one shared stream so the difference carries no probe noise.
CoverageComparison coverage_loss(const PointCloud& cloud, const Tree& tree,
                                 double disk_radius, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace covtree
