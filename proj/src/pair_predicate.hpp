#pragma once

#include <cmath>

namespace covtree {
namespace detail {

// Canonical per-pair proximity test. Every code path that decides whether two
// points are within a radius (graph adjacency, coverage flags, the public
// within_radius) runs exactly this operation sequence, so scalar and vector
// backends agree bit for bit. bound is r*r for the Euclidean norm and r for
// the uniform norm.

template <bool Torus>
inline double fold_axis(double d, double side) {
    double a = std::fabs(d);
    if constexpr (!Torus) return a;
    double w = side - a;
    return a < w ? a : w;
}

template <bool Torus, bool Linf, bool Closed>
inline bool pair_within(double dx, double dy, double side, double bound) {
    double ax = fold_axis<Torus>(dx, side);
    double ay = fold_axis<Torus>(dy, side);
    double v;
    if constexpr (Linf) {
        v = ax > ay ? ax : ay;
    } else {
        v = ax * ax + ay * ay;
    }
    if constexpr (Closed) return v <= bound;
    return v < bound;
}

}  // namespace detail
}  // namespace covtree
