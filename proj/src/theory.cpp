#include "covtree/theory.hpp"

#include <cmath>

#include "covtree/complex.hpp"
#include "covtree/error.hpp"

namespace covtree {
namespace {

void check_chi_inputs(double lambda, double r, double side_a) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("intensity must be finite and nonnegative");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw ParameterError("radius must be finite and positive");
    }
    if (!(side_a > 0.0) || !std::isfinite(side_a)) {
        throw ParameterError("side length must be finite and positive");
    }
}

}  // namespace

double expected_chi_series(const ChiParams& p) {
    check_chi_inputs(p.lambda, p.r, p.side_a);
    if (p.dim_d < 1) throw ParameterError("dimension must be at least 1");
    if (p.series_terms < 1) throw ParameterError("series_terms must be at least 1");

    const double d = static_cast<double>(p.dim_d);
    const double x = -p.lambda * std::pow(p.r, d);
    const std::size_t hard_cap = 10 * p.series_terms;

    double sum = 0.0;
    double term = x;  // k = 1: x^1 * 1^d / 1!
    std::size_t k = 1;
    for (;;) {
        sum += term;
        if (!std::isfinite(sum)) throw NumericError("series sum left the finite range");
        double scale = std::fabs(sum);
        if (scale < 1.0) scale = 1.0;
        if (k >= p.series_terms && std::fabs(term) < 1e-12 * scale) break;
        if (k >= hard_cap) {
            throw NumericError("series did not settle within ten times series_terms");
        }
        term = term * x * std::pow((k + 1.0) / k, d) / (k + 1.0);
        ++k;
    }
    return -std::pow(p.side_a / p.r, d) * sum;
}

double expected_chi_2d(double lambda, double r, double side_a) {
    check_chi_inputs(lambda, r, side_a);
    const double u = lambda * r * r;
    return side_a * side_a * lambda * (1.0 - u) * std::exp(-u);
}

std::int64_t empirical_chi(const PointCloud& cloud, double r, std::size_t size_cap) {
    const std::vector<std::uint64_t> counts = count_simplices_full(cloud, r, size_cap);
    std::int64_t chi = 0;
    std::int64_t sign = 1;
    for (std::uint64_t s : counts) {
        chi += sign * static_cast<std::int64_t>(s);
        sign = -sign;
    }
    return chi;
}

}  // namespace covtree
