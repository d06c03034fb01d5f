#include "covtree/geometry.hpp"

#include <cmath>

#include "covtree/rng.hpp"
#include "pair_predicate.hpp"

namespace covtree {
namespace {

double wrap_abs(double d, double side) {
    double a = std::fabs(d);
    double w = side - a;
    return a < w ? a : w;
}

void check_side(double side) {
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw ParameterError("side length must be finite and positive");
    }
}

}  // namespace

double distance(const Point& p, const Point& q, const Geometry& geom) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    if (geom.boundary == Boundary::torus) {
        dx = wrap_abs(dx, geom.side);
        dy = wrap_abs(dy, geom.side);
    } else {
        dx = std::fabs(dx);
        dy = std::fabs(dy);
    }
    if (geom.norm == Norm::uniform) {
        return dx > dy ? dx : dy;
    }
    return std::sqrt(dx * dx + dy * dy);
}

bool within_radius(const Point& p, const Point& q, const Geometry& geom, double r) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    bool torus = geom.boundary == Boundary::torus;
    if (geom.norm == Norm::uniform) {
        if (torus) return detail::pair_within<true, true, false>(dx, dy, geom.side, r);
        return detail::pair_within<false, true, false>(dx, dy, geom.side, r);
    }
    double r2 = r * r;
    if (torus) return detail::pair_within<true, false, false>(dx, dy, geom.side, r2);
    return detail::pair_within<false, false, false>(dx, dy, geom.side, r2);
}

PointCloud sample_binomial(std::size_t n, double side, Boundary boundary, Norm norm,
                           std::uint64_t seed) {
    check_side(side);
    PointCloud cloud;
    cloud.geom = Geometry{side, boundary, norm};
    cloud.xs.reserve(n);
    cloud.ys.reserve(n);
    Rng rng(derive_seed(seed, seed_stream::cloud));
    for (std::size_t i = 0; i < n; ++i) {
        double x = rng.uniform_to(side);
        double y = rng.uniform_to(side);
        cloud.push_back(x, y);
    }
    return cloud;
}

PointCloud sample_poisson(double lambda, double side, Boundary boundary, Norm norm,
                          std::uint64_t seed) {
    check_side(side);
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("intensity must be finite and nonnegative");
    }
    Rng rng(derive_seed(seed, seed_stream::cloud));
    std::uint64_t n = rng.poisson(lambda * side * side);
    PointCloud cloud;
    cloud.geom = Geometry{side, boundary, norm};
    cloud.xs.reserve(n);
    cloud.ys.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        double x = rng.uniform_to(side);
        double y = rng.uniform_to(side);
        cloud.push_back(x, y);
    }
    return cloud;
}

PointCloud subset_cloud(const PointCloud& cloud, const std::vector<VertexId>& vertices) {
    PointCloud out;
    out.geom = cloud.geom;
    out.xs.reserve(vertices.size());
    out.ys.reserve(vertices.size());
    for (VertexId v : vertices) {
        if (v >= cloud.size()) {
            throw ParameterError("subset vertex index out of range");
        }
        out.push_back(cloud.xs[v], cloud.ys[v]);
    }
    return out;
}

}  // namespace covtree
