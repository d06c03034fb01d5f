#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "covtree/geometry.hpp"
#include "covtree/kernels.hpp"

namespace covtree {

/// Vietoris-Rips complex truncated at dimension 2: all vertices, all pairs at
/// distance strictly below parameter_r, all triples pairwise strictly below
/// parameter_r. Face-closed by construction. Edges are lexicographically
/// sorted (i < j), triangles likewise (i < j < k).
struct RipsComplex {
    std::size_t vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::array<VertexId, 3>> triangles;
    double parameter_r = 0.0;
};

RipsComplex build_rips(const PointCloud& cloud, double r);

/// Simplex counts of the full (untruncated) complex: element k is the number
/// of k-simplices, i.e. (k+1)-cliques of the strict-radius graph. Exact
/// enumeration; a clique larger than size_cap vertices aborts with a resource
/// error because the count can grow exponentially in dense graphs.
std::vector<std::uint64_t> count_simplices_full(const PointCloud& cloud, double r,
                                                std::size_t size_cap);

/// Vertex count of the largest clique of the strict-radius graph that
/// contains the edge (i, j); a bare edge has height 2. adj must be the
/// adjacency of that graph. Exact branch-and-bound search on the common
/// neighborhood of the endpoints. A non-null restrict_mask (word-packed over
/// vertices) limits the search to the induced subgraph on the set bits.
std::size_t edge_height(const kernels::BitMatrix& adj, VertexId i, VertexId j,
                        const std::uint64_t* restrict_mask = nullptr);

}  // namespace covtree
