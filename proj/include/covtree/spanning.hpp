#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covtree/geometry.hpp"

namespace covtree {

/// Edge weight used by the tree builder. min_distance selects the shortest
/// candidate edge, max_distance the longest, max_height the edge contained
/// in the largest clique.
enum class WeightMetric { min_distance, max_distance, max_height };

/// True when the metric selects the largest weight instead of the smallest.
inline bool metric_maximizes(WeightMetric m) { return m != WeightMetric::min_distance; }

const char* metric_name(WeightMetric m);
WeightMetric parse_metric(const std::string& name);

/// One rejected candidate edge (inside, outside), recorded with the member
/// count at the moment of rejection so the verdict can be replayed: the
/// complex on the first tree_size members plus `outside` has a hole.
struct RejectionEvent {
    VertexId inside = 0;
    VertexId outside = 0;
    std::uint32_t tree_size = 0;
};

/// Rooted communication tree over a point cloud. members lists tree vertices
/// in acceptance order (members[0] is the root) and tree_edges lists the
/// accepted (parent, child) pairs in the same order, so any growth prefix
/// can be reconstructed. parent and depth are indexed by cloud vertex and
/// only meaningful for members (parent is -1 for the root and non-members).
/// rejected holds vertices adjacent to the root's component that the hole
/// test kept out; unreachable holds vertices outside the root's component.
struct Tree {
    VertexId root = 0;
    std::vector<VertexId> members;
    std::vector<std::pair<VertexId, VertexId>> tree_edges;
    std::vector<std::int32_t> parent;
    std::vector<std::uint32_t> depth;
    std::vector<VertexId> rejected;
    std::vector<VertexId> unreachable;
    std::vector<RejectionEvent> rejections;
};

/// Hop-limited cover of the cloud by disjoint trees. Every vertex belongs to
/// exactly one tree (a vertex every tree refused ends up as a singleton
/// tree, so none is left over); rejected stays empty and exists to make that
/// contract explicit. Member trees carry no rejected/unreachable sets of
/// their own.
struct Forest {
    std::vector<Tree> trees;
    std::uint32_t hop_limit = 0;
    std::vector<VertexId> rejected;
};

struct BranchStats {
    double mean_hops = 0.0;
    std::uint32_t max_hops = 0;
    double mean_length = 0.0;
    double max_length = 0.0;
};

struct RipsComplex;

/// Weight of every complex edge under the metric, aligned with cx.edges.
std::vector<double> edge_weights(const RipsComplex& cx, const PointCloud& cloud,
                                 WeightMetric metric);

/// Grows a tree from the root (drawn uniformly from the seed when absent) by
/// repeatedly admitting the extremal-weight candidate edge with exactly one
/// endpoint inside, refusing any admission that would create a hole: the
/// full proximity complex on the would-be member set must keep its first
/// Betti number at zero. Candidate edges to a refused vertex reappear as the
/// tree grows; the vertex joins later if some larger member set accepts it.
Tree build_tree(const PointCloud& cloud, double r, WeightMetric metric,
                std::optional<VertexId> root, std::uint64_t seed);

/// Root-to-leaf branch statistics: hops counts edges on the path, length
/// sums geometric edge lengths, means are over leaves. A single-vertex tree
/// reports zeros.
BranchStats branch_stats(const Tree& tree, const PointCloud& cloud);

/// Repeats tree building on the vertices not yet assigned, drawing each new
/// root uniformly among them, with the extra admission rule that a child
/// may not sit deeper than hop_limit hops from its root. Every vertex ends
/// in exactly one tree.
Forest build_forest(const PointCloud& cloud, double r, WeightMetric metric,
                    std::uint32_t hop_limit, std::uint64_t seed);

}  // namespace covtree
