#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covtree/error.hpp"

namespace covtree {

using VertexId = std::uint32_t;

enum class Boundary { plane, torus };
enum class Norm { euclidean, uniform };

/// Domain geometry: the square [0, side)^2, either with hard edges (plane) or
/// with opposite edges glued (flat torus), measured with the Euclidean or the
/// uniform (L-infinity) norm.
struct Geometry {
    double side = 1.0;
    Boundary boundary = Boundary::plane;
    Norm norm = Norm::euclidean;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Finite point set on a square domain, stored as coordinate arrays.
/// Coordinates are half-open in [0, side) so torus wrapping is unambiguous at
/// the seam. Vertex index = list position; the order is stable.
struct PointCloud {
    std::vector<double> xs;
    std::vector<double> ys;
    Geometry geom;

    std::size_t size() const { return xs.size(); }
    bool empty() const { return xs.empty(); }
    Point point(std::size_t i) const { return {xs[i], ys[i]}; }
    void push_back(double x, double y) {
        xs.push_back(x);
        ys.push_back(y);
    }
};

/// Distance from p to q. On the torus each coordinate difference first wraps
/// to min(|d|, side - |d|); the uniform norm takes the larger coordinate
/// difference instead of the Euclidean length.
double distance(const Point& p, const Point& q, const Geometry& geom);

inline double distance(const PointCloud& cloud, std::size_t i, std::size_t j) {
    return distance(cloud.point(i), cloud.point(j), cloud.geom);
}

/// Strict adjacency predicate d(p, q) < r. For the Euclidean norm this is
/// evaluated on squared lengths; it is the single primitive that decides
/// membership of pairs everywhere (complex construction included).
bool within_radius(const Point& p, const Point& q, const Geometry& geom, double r);

/// Exactly n points i.i.d. uniform on the square. Deterministic per seed.
PointCloud sample_binomial(std::size_t n, double side, Boundary boundary, Norm norm,
                           std::uint64_t seed);

/// Point count ~ Poisson(lambda * side^2), positions i.i.d. uniform.
/// Deterministic per seed.
PointCloud sample_poisson(double lambda, double side, Boundary boundary, Norm norm,
                          std::uint64_t seed);

/// Cloud restricted to the given vertices, order kept, geometry shared.
PointCloud subset_cloud(const PointCloud& cloud, const std::vector<VertexId>& vertices);

}  // namespace covtree
