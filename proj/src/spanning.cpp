#include "covtree/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

#include "covtree/complex.hpp"
#include "covtree/error.hpp"
#include "covtree/kernels.hpp"
#include "covtree/rng.hpp"
#include "gf2.hpp"

namespace covtree {
namespace {

std::uint64_t pack_pair(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
}

// First Betti number of the proximity complex induced on a growing member
// set, maintained incrementally. The member set is always connected (every
// admitted vertex arrives through an edge to a member), so beta0 = 1 and
// rank d1 = |members| - 1 without any reduction; only the d2 reduction is
// carried, persistence-style, with committed columns reused across probes.
// Edge rows are numbered in admission order; GF(2) rank does not depend on
// column or row order, so the count equals a from-scratch recomputation.
class HoleTester {
  public:
    HoleTester(const kernels::BitMatrix& adj, VertexId root)
        : adj_(adj), words_n_(adj.words_per_row), member_mask_(adj.words_per_row, 0) {
        gf2::set_bit(member_mask_.data(), root);
        member_count_ = 1;
    }

    /// beta1 of the complex on members plus x; leaves members unchanged.
    /// x must be adjacent to at least one member.
    std::size_t probe(VertexId x) {
        pending_x_ = x;
        pending_nb_.clear();
        pending_cols_.clear();
        pending_pivots_.clear();

        for (std::size_t w = 0; w < words_n_; ++w) {
            std::uint64_t bits = member_mask_[w] & adj_.row(x)[w];
            while (bits) {
                pending_nb_.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }

        const std::size_t k = pending_nb_.size();
        const std::size_t s1_new = edge_count_ + k;
        const std::size_t col_words = (s1_new + 63) / 64;
        std::size_t new_rank = 0;

        std::vector<std::uint64_t> work(col_words);
        for (std::size_t vi = 0; vi < k; ++vi) {
            for (std::size_t ui = 0; ui < vi; ++ui) {
                const VertexId u = pending_nb_[ui];
                const VertexId v = pending_nb_[vi];
                if (!adj_.get(u, v)) continue;
                std::fill(work.begin(), work.end(), 0);
                gf2::set_bit(work.data(), edge_row(u, v));
                gf2::set_bit(work.data(), edge_count_ + ui);
                gf2::set_bit(work.data(), edge_count_ + vi);
                if (reduce(work)) {
                    std::ptrdiff_t low = gf2::lowest_one(work.data(), work.size());
                    pending_pivots_.emplace(static_cast<std::uint32_t>(low),
                                            static_cast<std::uint32_t>(pending_cols_.size()));
                    pending_cols_.push_back(work);
                    ++new_rank;
                }
            }
        }

        pending_new_rank_ = new_rank;
        // beta1 = s1 - (v - 1) - rank d2 with v = member_count_ + 1.
        return s1_new - member_count_ - (rank2_ + new_rank);
    }

    /// Makes the last probed vertex a member, keeping its reduced columns.
    void commit() {
        const std::size_t base = committed_.size();
        for (auto& col : pending_cols_) committed_.push_back(std::move(col));
        const std::size_t s1_new = edge_count_ + pending_nb_.size();
        if (pivot_of_row_.size() < s1_new) pivot_of_row_.resize(s1_new, -1);
        for (const auto& [row, local] : pending_pivots_) {
            pivot_of_row_[row] = static_cast<std::ptrdiff_t>(base + local);
        }
        for (std::size_t i = 0; i < pending_nb_.size(); ++i) {
            edge_row_.emplace(pack_pair(pending_x_, pending_nb_[i]), edge_count_ + i);
        }
        edge_count_ = s1_new;
        rank2_ += pending_new_rank_;
        gf2::set_bit(member_mask_.data(), pending_x_);
        ++member_count_;
        pending_cols_.clear();
        pending_pivots_.clear();
    }

  private:
    std::uint32_t edge_row(VertexId u, VertexId v) const {
        return edge_row_.at(pack_pair(u, v));
    }

    // Column elimination against committed and probe-local columns; returns
    // true if the column survives as a new pivot.
    bool reduce(std::vector<std::uint64_t>& work) {
        for (;;) {
            std::ptrdiff_t low = gf2::lowest_one(work.data(), work.size());
            if (low < 0) return false;
            const std::uint64_t row = static_cast<std::uint64_t>(low);
            if (row < pivot_of_row_.size() && pivot_of_row_[row] >= 0) {
                const auto& col = committed_[pivot_of_row_[row]];
                kernels::xor_words(work.data(), col.data(), col.size());
                continue;
            }
            auto it = pending_pivots_.find(static_cast<std::uint32_t>(row));
            if (it != pending_pivots_.end()) {
                const auto& col = pending_cols_[it->second];
                kernels::xor_words(work.data(), col.data(), col.size());
                continue;
            }
            return true;
        }
    }

    const kernels::BitMatrix& adj_;
    std::size_t words_n_;
    std::vector<std::uint64_t> member_mask_;
    std::size_t member_count_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t rank2_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_row_;
    std::vector<std::vector<std::uint64_t>> committed_;
    std::vector<std::ptrdiff_t> pivot_of_row_;

    VertexId pending_x_ = 0;
    std::vector<VertexId> pending_nb_;
    std::vector<std::vector<std::uint64_t>> pending_cols_;
    std::unordered_map<std::uint32_t, std::uint32_t> pending_pivots_;
    std::size_t pending_new_rank_ = 0;
};

struct Cand {
    double weight;
    VertexId inside;
    VertexId outside;
};

// Orders the heap so the extremal weight pops first; equal weights pop in
// ascending (inside, outside) order for deterministic runs.
struct CandAfter {
    bool maximize;
    bool operator()(const Cand& a, const Cand& b) const {
        if (a.weight != b.weight) {
            return maximize ? a.weight < b.weight : a.weight > b.weight;
        }
        if (a.inside != b.inside) return a.inside > b.inside;
        return a.outside > b.outside;
    }
};

struct GrowLimits {
    const std::uint64_t* allowed = nullptr;  // word-packed vertex mask, null = all
    std::uint32_t hop_limit = 0;             // 0 = unlimited
};

double candidate_weight(const PointCloud& cloud, const kernels::BitMatrix& adj,
                        WeightMetric metric, VertexId u, VertexId v,
                        const std::uint64_t* allowed) {
    if (metric == WeightMetric::max_height) {
        return static_cast<double>(edge_height(adj, u, v, allowed));
    }
    return distance(cloud, u, v);
}

// The admission loop shared by tree and forest building. Classification of
// the left-over vertices is the caller's business.
Tree grow_tree(const PointCloud& cloud, const kernels::BitMatrix& adj,
               WeightMetric metric, VertexId root, const GrowLimits& limits) {
    const std::size_t n = cloud.size();
    Tree tree;
    tree.root = root;
    tree.parent.assign(n, -1);
    tree.depth.assign(n, 0);
    tree.members.push_back(root);

    std::vector<char> in_tree(n, 0);
    in_tree[root] = 1;
    std::vector<std::uint32_t> rejected_at(n, UINT32_MAX);

    HoleTester tester(adj, root);
    std::priority_queue<Cand, std::vector<Cand>, CandAfter> heap(
        CandAfter{metric_maximizes(metric)});

    auto push_candidates = [&](VertexId x) {
        if (limits.hop_limit != 0 && tree.depth[x] + 1 > limits.hop_limit) return;
        for (std::size_t w = 0; w < adj.words_per_row; ++w) {
            std::uint64_t bits = adj.row(x)[w];
            if (limits.allowed != nullptr) bits &= limits.allowed[w];
            while (bits) {
                VertexId y = static_cast<VertexId>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                if (in_tree[y]) continue;
                heap.push({candidate_weight(cloud, adj, metric, x, y, limits.allowed), x, y});
            }
        }
    };
    push_candidates(root);

    while (!heap.empty()) {
        Cand c = heap.top();
        heap.pop();
        if (in_tree[c.outside]) continue;  // joined through another edge meanwhile

        const std::uint32_t version = static_cast<std::uint32_t>(tree.members.size());
        if (rejected_at[c.outside] == version) {
            // The hole test depends only on the member set, so the cached
            // verdict covers every edge toward this vertex until the tree grows.
            tree.rejections.push_back({c.inside, c.outside, version});
            continue;
        }
        if (tester.probe(c.outside) != 0) {
            rejected_at[c.outside] = version;
            tree.rejections.push_back({c.inside, c.outside, version});
            continue;
        }
        tester.commit();
        in_tree[c.outside] = 1;
        tree.parent[c.outside] = static_cast<std::int32_t>(c.inside);
        tree.depth[c.outside] = tree.depth[c.inside] + 1;
        tree.members.push_back(c.outside);
        tree.tree_edges.emplace_back(c.inside, c.outside);
        push_candidates(c.outside);
    }
    return tree;
}

void check_radius_positive(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw ParameterError("radius must be finite and positive");
    }
}

}  // namespace

const char* metric_name(WeightMetric m) {
    switch (m) {
        case WeightMetric::min_distance: return "min_distance";
        case WeightMetric::max_distance: return "max_distance";
        case WeightMetric::max_height: return "max_height";
    }
    throw ParameterError("unknown weight metric value");
}

WeightMetric parse_metric(const std::string& name) {
    if (name == "min_distance") return WeightMetric::min_distance;
    if (name == "max_distance") return WeightMetric::max_distance;
    if (name == "max_height") return WeightMetric::max_height;
    throw ParameterError("metric must be min_distance, max_distance, or max_height, got \"" +
                         name + "\"");
}

std::vector<double> edge_weights(const RipsComplex& cx, const PointCloud& cloud,
                                 WeightMetric metric) {
    std::vector<double> weights;
    weights.reserve(cx.edges.size());
    if (metric == WeightMetric::max_height) {
        kernels::BitMatrix adj = kernels::adjacency(cloud, cx.parameter_r);
        for (const auto& [i, j] : cx.edges) {
            weights.push_back(static_cast<double>(edge_height(adj, i, j)));
        }
    } else {
        for (const auto& [i, j] : cx.edges) {
            weights.push_back(distance(cloud, i, j));
        }
    }
    return weights;
}

Tree build_tree(const PointCloud& cloud, double r, WeightMetric metric,
                std::optional<VertexId> root, std::uint64_t seed) {
    if (cloud.empty()) throw ParameterError("cannot build a tree over an empty cloud");
    check_radius_positive(r);
    const std::size_t n = cloud.size();
    VertexId root_vertex;
    if (root.has_value()) {
        if (*root >= n) throw ParameterError("root index out of range");
        root_vertex = *root;
    } else {
        Rng rng(derive_seed(seed, seed_stream::root));
        root_vertex = static_cast<VertexId>(rng.uniform_index(n));
    }

    kernels::BitMatrix adj = kernels::adjacency(cloud, r);
    Tree tree = grow_tree(cloud, adj, metric, root_vertex, GrowLimits{});

    // Left-over vertices: those the proximity graph connects to the root are
    // rejected, the rest were never reachable at all.
    std::vector<char> in_tree(n, 0);
    for (VertexId v : tree.members) in_tree[v] = 1;
    std::vector<char> in_component(n, 0);
    std::vector<VertexId> stack{root_vertex};
    in_component[root_vertex] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < adj.words_per_row; ++w) {
            std::uint64_t bits = adj.row(v)[w];
            while (bits) {
                VertexId y = static_cast<VertexId>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                if (!in_component[y]) {
                    in_component[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (in_tree[v]) continue;
        if (in_component[v]) {
            tree.rejected.push_back(static_cast<VertexId>(v));
        } else {
            tree.unreachable.push_back(static_cast<VertexId>(v));
        }
    }
    return tree;
}

BranchStats branch_stats(const Tree& tree, const PointCloud& cloud) {
    if (tree.members.empty()) throw ParameterError("tree has no vertices");
    BranchStats stats;
    if (tree.members.size() == 1) return stats;

    std::vector<char> has_child(cloud.size(), 0);
    for (const auto& [p, c] : tree.tree_edges) has_child[p] = 1;

    std::size_t leaves = 0;
    double hop_sum = 0.0;
    double len_sum = 0.0;
    for (VertexId v : tree.members) {
        if (v == tree.root || has_child[v]) continue;
        ++leaves;
        hop_sum += tree.depth[v];
        if (tree.depth[v] > stats.max_hops) stats.max_hops = tree.depth[v];
        double len = 0.0;
        for (VertexId u = v; u != tree.root;) {
            VertexId p = static_cast<VertexId>(tree.parent[u]);
            len += distance(cloud, u, p);
            u = p;
        }
        len_sum += len;
        if (len > stats.max_length) stats.max_length = len;
    }
    if (leaves > 0) {
        stats.mean_hops = hop_sum / static_cast<double>(leaves);
        stats.mean_length = len_sum / static_cast<double>(leaves);
    }
    return stats;
}

Forest build_forest(const PointCloud& cloud, double r, WeightMetric metric,
                    std::uint32_t hop_limit, std::uint64_t seed) {
    if (hop_limit < 1) throw ParameterError("hop limit must be at least 1");
    check_radius_positive(r);
    Forest forest;
    forest.hop_limit = hop_limit;
    if (cloud.empty()) return forest;

    const std::size_t n = cloud.size();
    kernels::BitMatrix adj = kernels::adjacency(cloud, r);
    Rng root_rng(derive_seed(seed, seed_stream::root));

    std::vector<VertexId> unassigned(n);
    for (std::size_t v = 0; v < n; ++v) unassigned[v] = static_cast<VertexId>(v);
    std::vector<std::uint64_t> allowed(adj.words_per_row, 0);
    for (std::size_t v = 0; v < n; ++v) gf2::set_bit(allowed.data(), v);

    while (!unassigned.empty()) {
        const std::size_t pick = root_rng.uniform_index(unassigned.size());
        const VertexId root = unassigned[pick];
        GrowLimits limits{allowed.data(), hop_limit};
        Tree tree = grow_tree(cloud, adj, metric, root, limits);
        for (VertexId v : tree.members) {
            allowed[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        }
        std::erase_if(unassigned, [&](VertexId v) { return !gf2::get_bit(allowed.data(), v); });
        forest.trees.push_back(std::move(tree));
    }
    return forest;
}

}  // namespace covtree
