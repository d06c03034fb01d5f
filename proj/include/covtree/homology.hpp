#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covtree/complex.hpp"

namespace covtree {

/// Boundary map of the k-simplices over GF(2), stored column-sparse: each
/// column lists the row indices of the (k-1)-faces, strictly increasing.
/// Columns of degree 1 have exactly two entries, of degree 2 exactly three.
struct BoundaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    int degree_k = 1;
    std::vector<std::vector<std::uint32_t>> columns;
};

struct BettiProfile {
    std::size_t beta0 = 0;
    std::size_t beta1 = 0;
};

BoundaryMatrix boundary_matrix(const RipsComplex& cx, int k);

/// Rank over GF(2) by column elimination with lowest-one pivoting.
std::size_t rank_gf2(const BoundaryMatrix& m);

/// beta0 = s0 - rank d1 (connected components), beta1 = (s1 - rank d1) -
/// rank d2 (independent 1-cycles not bounding a triangle chain). The
/// dimension-2 truncation keeps every triangle, so beta1 equals the full
/// complex's value.
BettiProfile betti(const RipsComplex& cx);

/// Component count of the 1-skeleton by disjoint-set union; an oracle for
/// betti().beta0 that shares no code with the rank computation.
std::size_t connected_components(const RipsComplex& cx);

}  // namespace covtree
