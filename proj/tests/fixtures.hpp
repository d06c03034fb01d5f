#pragma once

#include <cmath>

#include "covtree/geometry.hpp"

namespace fixtures {

// Regular hexagon with circumradius 1 centered at (cx, cy). With r = 1.2 the
// Rips complex is the 6-cycle: adjacent vertices sit at distance 1, the next
// nearest at sqrt(3).
inline covtree::PointCloud hexagon(double cx = 5.0, double cy = 5.0, double side = 10.0) {
    covtree::PointCloud cloud;
    cloud.geom.side = side;
    for (int k = 0; k < 6; ++k) {
        const double a = k * std::acos(-1.0) / 3.0;
        cloud.push_back(cx + std::cos(a), cy + std::sin(a));
    }
    return cloud;
}

// Two hexagons whose rims are joined through a middle vertex: centers at
// (4, 5) and (8, 5), bridge at (6, 5). With r = 1.2 this is two 6-cycles
// plus a 2-edge path, so beta1 = 2.
inline covtree::PointCloud two_hexagons_bridged(double side = 12.0) {
    covtree::PointCloud a = hexagon(4.0, 5.0, side);
    covtree::PointCloud b = hexagon(8.0, 5.0, side);
    covtree::PointCloud cloud;
    cloud.geom.side = side;
    for (std::size_t i = 0; i < a.size(); ++i) cloud.push_back(a.xs[i], a.ys[i]);
    for (std::size_t i = 0; i < b.size(); ++i) cloud.push_back(b.xs[i], b.ys[i]);
    cloud.push_back(6.0, 5.0);
    return cloud;
}

// Three points pairwise within r = 1: a single filled triangle.
inline covtree::PointCloud filled_triangle(double side = 10.0) {
    covtree::PointCloud cloud;
    cloud.geom.side = side;
    cloud.push_back(5.0, 5.0);
    cloud.push_back(5.6, 5.0);
    cloud.push_back(5.3, 5.5);
    return cloud;
}

}  // namespace fixtures
