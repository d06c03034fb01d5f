#include "covtree/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "covtree/coverage.hpp"
#include "covtree/error.hpp"
#include "covtree/io.hpp"
#include "covtree/theory.hpp"

namespace covtree {
namespace {

// Runs fn(0..count) across a small worker pool and returns results in trial
// order; aggregation downstream never depends on the worker count.
template <typename R, typename F>
std::vector<R> run_indexed(std::size_t count, F&& fn) {
    std::vector<R> results(count);
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > count) workers = count;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

struct MeanAccum {
    double sum = 0.0;
    double sumsq = 0.0;
    std::size_t count = 0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++count;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
    double stderr_of_mean() const {
        if (count < 2) return 0.0;
        const double n = static_cast<double>(count);
        double var = (sumsq - sum * sum / n) / (n - 1.0);
        if (var < 0.0) var = 0.0;  // rounding can push an all-equal sample below zero
        return std::sqrt(var / n);
    }
};

void check_common(const ExperimentConfig& c, Scenario expected) {
    if (c.scenario != expected) throw ParameterError("config scenario does not match the runner");
    if (c.trials < 1) throw ParameterError("trials must be at least 1");
    if (!(c.side_a > 0.0)) throw ParameterError("side_a must be positive");
    if (!(c.r > 0.0)) throw ParameterError("r must be positive");
    if (c.base_seed > UINT64_MAX - c.trials) throw ParameterError("base_seed too large");
}

double disk_radius_of(const ExperimentConfig& c) {
    return c.disk_radius > 0.0 ? c.disk_radius : c.r / 2.0;
}

std::string pct(double fraction) { return format_stat(100.0 * fraction); }

}  // namespace

ExperimentReport run_rejection_experiment(const ExperimentConfig& config) {
    check_common(config, Scenario::rejection);
    if (config.n_values.empty()) throw ParameterError("n_values must not be empty");
    if (config.metrics.empty()) throw ParameterError("metrics must not be empty");

    ExperimentReport report;
    report.scenario = Scenario::rejection;
    const WeightMetric metric = config.metrics.front();

    for (std::size_t n : config.n_values) {
        if (n < 1) throw ParameterError("n must be at least 1");
        struct TrialOut {
            double tree_pct, rejected_pct, unreachable_pct;
        };
        auto outs = run_indexed<TrialOut>(config.trials, [&](std::size_t t) {
            const std::uint64_t seed = config.base_seed + t;
            PointCloud cloud =
                sample_binomial(n, config.side_a, config.boundary, config.norm, seed);
            Tree tree = build_tree(cloud, config.r, metric, std::nullopt, seed);
            const double scale = 100.0 / static_cast<double>(n);
            return TrialOut{scale * static_cast<double>(tree.members.size()),
                            scale * static_cast<double>(tree.rejected.size()),
                            scale * static_cast<double>(tree.unreachable.size())};
        });
        MeanAccum tree_a, rej_a, unr_a;
        for (const TrialOut& o : outs) {
            tree_a.add(o.tree_pct);
            rej_a.add(o.rejected_pct);
            unr_a.add(o.unreachable_pct);
        }
        RejectionRow row;
        row.n = n;
        row.metric = metric;
        row.trials = config.trials;
        row.seed_first = config.base_seed;
        row.seed_last = config.base_seed + config.trials - 1;
        row.tree_pct = tree_a.mean();
        row.rejected_pct = rej_a.mean();
        row.unreachable_pct = unr_a.mean();
        row.rejected_pct_stderr = rej_a.stderr_of_mean();
        report.rejection_rows.push_back(row);
    }
    return report;
}

ExperimentReport run_coverage_experiment(const ExperimentConfig& config) {
    check_common(config, Scenario::coverage);
    if (config.n_values.empty()) throw ParameterError("n_values must not be empty");
    if (config.metrics.empty()) throw ParameterError("metrics must not be empty");
    if (config.samples < 1) throw ParameterError("samples must be at least 1");

    ExperimentReport report;
    report.scenario = Scenario::coverage;
    const WeightMetric metric = config.metrics.front();
    const double rho = disk_radius_of(config);

    for (std::size_t n : config.n_values) {
        if (n < 1) throw ParameterError("n must be at least 1");
        struct TrialOut {
            double before, after, rel, abs;
        };
        auto outs = run_indexed<TrialOut>(config.trials, [&](std::size_t t) {
            const std::uint64_t seed = config.base_seed + t;
            PointCloud cloud =
                sample_binomial(n, config.side_a, config.boundary, config.norm, seed);
            Tree tree = build_tree(cloud, config.r, metric, std::nullopt, seed);
            CoverageComparison cmp = coverage_loss(cloud, tree, rho, config.samples, seed);
            return TrialOut{cmp.before.covered_fraction, cmp.after.covered_fraction,
                            cmp.relative_loss(), cmp.absolute_loss()};
        });
        MeanAccum before_a, after_a, rel_a, abs_a;
        for (const TrialOut& o : outs) {
            before_a.add(o.before);
            after_a.add(o.after);
            rel_a.add(o.rel);
            abs_a.add(o.abs);
        }
        CoverageRow row;
        row.n = n;
        row.metric = metric;
        row.trials = config.trials;
        row.seed_first = config.base_seed;
        row.seed_last = config.base_seed + config.trials - 1;
        row.samples = config.samples;
        row.disk_radius = rho;
        row.before_fraction = before_a.mean();
        row.after_fraction = after_a.mean();
        row.relative_loss = rel_a.mean();
        row.absolute_loss = abs_a.mean();
        row.relative_loss_stderr = rel_a.stderr_of_mean();
        report.coverage_rows.push_back(row);
    }
    return report;
}

ExperimentReport run_metrics_experiment(const ExperimentConfig& config) {
    check_common(config, Scenario::metrics);
    if (config.n_values.empty()) throw ParameterError("n_values must not be empty");
    if (config.metrics.empty()) throw ParameterError("metrics must not be empty");
    if (config.samples < 1) throw ParameterError("samples must be at least 1");

    ExperimentReport report;
    report.scenario = Scenario::metrics;
    const double rho = disk_radius_of(config);

    for (std::size_t n : config.n_values) {
        if (n < 1) throw ParameterError("n must be at least 1");
        struct TrialOut {
            double hops, max_hops, length, max_length, after;
        };
        for (WeightMetric metric : config.metrics) {
            auto outs = run_indexed<TrialOut>(config.trials, [&](std::size_t t) {
                const std::uint64_t seed = config.base_seed + t;
                PointCloud cloud =
                    sample_binomial(n, config.side_a, config.boundary, config.norm, seed);
                Tree tree = build_tree(cloud, config.r, metric, std::nullopt, seed);
                BranchStats stats = branch_stats(tree, cloud);
                CoverageEstimate after = covered_area(subset_cloud(cloud, tree.members),
                                                      rho, config.samples, seed);
                return TrialOut{stats.mean_hops, static_cast<double>(stats.max_hops),
                                stats.mean_length, stats.max_length,
                                after.covered_fraction};
            });
            MeanAccum hops_a, maxh_a, len_a, maxl_a, after_a;
            for (const TrialOut& o : outs) {
                hops_a.add(o.hops);
                maxh_a.add(o.max_hops);
                len_a.add(o.length);
                maxl_a.add(o.max_length);
                after_a.add(o.after);
            }
            MetricsRow row;
            row.n = n;
            row.metric = metric;
            row.trials = config.trials;
            row.seed_first = config.base_seed;
            row.seed_last = config.base_seed + config.trials - 1;
            row.mean_hops = hops_a.mean();
            row.mean_max_hops = maxh_a.mean();
            row.mean_length = len_a.mean();
            row.mean_max_length = maxl_a.mean();
            row.after_fraction = after_a.mean();
            report.metrics_rows.push_back(row);
        }
    }
    return report;
}

ExperimentReport run_chi_experiment(const ExperimentConfig& config) {
    check_common(config, Scenario::chi);
    if (config.lambda_values.empty()) throw ParameterError("lambda_values must not be empty");

    ExperimentReport report;
    report.scenario = Scenario::chi;

    for (double lambda : config.lambda_values) {
        ChiRow row;
        row.lambda = lambda;
        row.expected_chi = expected_chi_2d(lambda, config.r, config.side_a);
        row.seed_first = config.base_seed;
        row.seed_last = config.base_seed + config.trials - 1;
        if (lambda > config.chi_empirical_max_lambda) {
            row.skipped = true;
        } else {
            try {
                auto chis = run_indexed<std::int64_t>(config.trials, [&](std::size_t t) {
                    const std::uint64_t seed = config.base_seed + t;
                    PointCloud cloud = sample_poisson(lambda, config.side_a, config.boundary,
                                                      config.norm, seed);
                    return empirical_chi(cloud, config.r, config.clique_cap);
                });
                MeanAccum acc;
                for (std::int64_t chi : chis) acc.add(static_cast<double>(chi));
                row.empirical_mean = acc.mean();
                row.empirical_stderr = acc.stderr_of_mean();
                row.realizations = config.trials;
            } catch (const ResourceCapError&) {
                row.skipped = true;
            }
        }
        report.chi_rows.push_back(row);
    }
    return report;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    switch (scenario) {
        case Scenario::rejection:
            out << "n,metric,trials,seed_first,seed_last,tree_pct,rejected_pct,"
                   "unreachable_pct,rejected_pct_stderr\n";
            for (const RejectionRow& r : rejection_rows) {
                out << r.n << ',' << metric_name(r.metric) << ',' << r.trials << ','
                    << r.seed_first << ',' << r.seed_last << ',' << format_stat(r.tree_pct)
                    << ',' << format_stat(r.rejected_pct) << ','
                    << format_stat(r.unreachable_pct) << ','
                    << format_stat(r.rejected_pct_stderr) << "\n";
            }
            break;
        case Scenario::coverage:
            out << "n,metric,trials,seed_first,seed_last,samples,disk_radius,"
                   "before_pct,after_pct,relative_loss_pct,absolute_loss_pct,"
                   "relative_loss_pct_stderr\n";
            for (const CoverageRow& r : coverage_rows) {
                out << r.n << ',' << metric_name(r.metric) << ',' << r.trials << ','
                    << r.seed_first << ',' << r.seed_last << ',' << r.samples << ','
                    << format_double(r.disk_radius) << ',' << pct(r.before_fraction) << ','
                    << pct(r.after_fraction) << ',' << pct(r.relative_loss) << ','
                    << pct(r.absolute_loss) << ',' << pct(r.relative_loss_stderr) << "\n";
            }
            break;
        case Scenario::metrics:
            out << "n,metric,trials,seed_first,seed_last,mean_hops,mean_max_hops,"
                   "mean_length,mean_max_length,after_pct\n";
            for (const MetricsRow& r : metrics_rows) {
                out << r.n << ',' << metric_name(r.metric) << ',' << r.trials << ','
                    << r.seed_first << ',' << r.seed_last << ',' << format_stat(r.mean_hops)
                    << ',' << format_stat(r.mean_max_hops) << ','
                    << format_stat(r.mean_length) << ',' << format_stat(r.mean_max_length)
                    << ',' << pct(r.after_fraction) << "\n";
            }
            break;
        case Scenario::chi:
            out << "lambda,expected_chi,empirical_mean,empirical_stderr,realizations,"
                   "seed_first,seed_last\n";
            for (const ChiRow& r : chi_rows) {
                out << format_double(r.lambda) << ',' << format_stat(r.expected_chi) << ',';
                if (r.skipped) {
                    out << "skipped,skipped,0";
                } else {
                    out << format_stat(r.empirical_mean) << ','
                        << format_stat(r.empirical_stderr) << ',' << r.realizations;
                }
                out << ',' << r.seed_first << ',' << r.seed_last << "\n";
            }
            break;
        default:
            throw ParameterError("report scenario has no CSV schema");
    }
    return out.str();
}

}  // namespace covtree
