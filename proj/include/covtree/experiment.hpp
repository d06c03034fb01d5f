#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "covtree/geometry.hpp"
#include "covtree/spanning.hpp"

namespace covtree {

enum class Scenario { rejection, coverage, metrics, chi, single_tree, forest };

/// Shared knob set for every experiment runner. Each trial t draws its own
/// cloud and tree from seed base_seed + t, so any row can be reproduced in
/// isolation and reruns are byte-identical.
struct ExperimentConfig {
    Scenario scenario = Scenario::rejection;
    std::vector<std::size_t> n_values = {25, 50, 75, 100};
    std::vector<double> lambda_values;
    double side_a = 10.0;
    double r = 2.5;
    Boundary boundary = Boundary::plane;
    Norm norm = Norm::euclidean;
    std::vector<WeightMetric> metrics = {WeightMetric::min_distance};
    std::size_t trials = 1000;
    std::uint32_t hop_limit = 3;
    std::uint64_t base_seed = 1;
    std::size_t samples = 200000;
    double disk_radius = 0.0;  // nonpositive means r/2
    std::size_t clique_cap = 64;
    double chi_empirical_max_lambda = 1.5;  // above this, empirical chi is skipped
};

struct RejectionRow {
    std::size_t n = 0;
    WeightMetric metric = WeightMetric::min_distance;
    std::size_t trials = 0;
    std::uint64_t seed_first = 0;
    std::uint64_t seed_last = 0;
    double tree_pct = 0.0;
    double rejected_pct = 0.0;
    double unreachable_pct = 0.0;
    double rejected_pct_stderr = 0.0;
};

struct CoverageRow {
    std::size_t n = 0;
    WeightMetric metric = WeightMetric::min_distance;
    std::size_t trials = 0;
    std::uint64_t seed_first = 0;
    std::uint64_t seed_last = 0;
    std::size_t samples = 0;
    double disk_radius = 0.0;
    double before_fraction = 0.0;
    double after_fraction = 0.0;
    double relative_loss = 0.0;
    double absolute_loss = 0.0;
    double relative_loss_stderr = 0.0;
};

struct MetricsRow {
    std::size_t n = 0;
    WeightMetric metric = WeightMetric::min_distance;
    std::size_t trials = 0;
    std::uint64_t seed_first = 0;
    std::uint64_t seed_last = 0;
    double mean_hops = 0.0;
    double mean_max_hops = 0.0;
    double mean_length = 0.0;
    double mean_max_length = 0.0;
    double after_fraction = 0.0;
};

struct ChiRow {
    double lambda = 0.0;
    double expected_chi = 0.0;
    bool skipped = false;
    double empirical_mean = 0.0;
    double empirical_stderr = 0.0;
    std::size_t realizations = 0;
    std::uint64_t seed_first = 0;
    std::uint64_t seed_last = 0;
};

struct ExperimentReport {
    Scenario scenario = Scenario::rejection;
    std::vector<RejectionRow> rejection_rows;
    std::vector<CoverageRow> coverage_rows;
    std::vector<MetricsRow> metrics_rows;
    std::vector<ChiRow> chi_rows;

    /// Stable schema, one header row, LF endings, '.' decimal point.
    std::string to_csv() const;
};

/// Percentage of tree / rejected / unreachable vertices per n, averaged over
/// trials.
ExperimentReport run_rejection_experiment(const ExperimentConfig& config);

/// Covered fraction before and after tree building per n, with the loss both
/// relative to the before-coverage and as a share of the whole domain.
ExperimentReport run_coverage_experiment(const ExperimentConfig& config);

/// Branch shape and after-tree coverage per (n, metric). The same trial seed
/// is reused across metrics, so every metric sees identical clouds and
/// roots.
ExperimentReport run_metrics_experiment(const ExperimentConfig& config);

/// Expected Euler characteristic (closed form) across lambda_values, with
/// Monte-Carlo means where lambda permits exact clique counting.
ExperimentReport run_chi_experiment(const ExperimentConfig& config);

}  // namespace covtree
