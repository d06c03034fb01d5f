#include "covtree/complex.hpp"

#include <bit>
#include <cmath>

#include "covtree/error.hpp"

namespace covtree {
namespace {

void check_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw ParameterError("radius must be finite and positive");
    }
}

// Iterate set bits of words[0..words_n), ascending, calling f(index).
template <typename F>
void for_each_bit(const std::uint64_t* words, std::size_t words_n, F&& f) {
    for (std::size_t w = 0; w < words_n; ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            unsigned b = std::countr_zero(bits);
            f(w * 64 + b);
            bits &= bits - 1;
        }
    }
}

// AND of two rows restricted to indices > lo, written to out.
void and_above(const std::uint64_t* a, const std::uint64_t* b, std::size_t words_n,
               std::size_t lo, std::uint64_t* out) {
    std::size_t lo_word = (lo + 1) >> 6;
    for (std::size_t w = 0; w < lo_word && w < words_n; ++w) out[w] = 0;
    for (std::size_t w = lo_word; w < words_n; ++w) out[w] = a[w] & b[w];
    if (lo_word < words_n) {
        unsigned shift = (lo + 1) & 63;
        out[lo_word] &= ~std::uint64_t(0) << shift;
    }
}

bool all_zero(const std::uint64_t* words, std::size_t words_n) {
    for (std::size_t w = 0; w < words_n; ++w) {
        if (words[w]) return false;
    }
    return true;
}

std::size_t popcount_words(const std::uint64_t* words, std::size_t words_n) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_n; ++w) total += std::popcount(words[w]);
    return total;
}

// Per-depth scratch rows for the recursive searches below.
struct Scratch {
    std::size_t words_n;
    std::vector<std::uint64_t> buf;
    explicit Scratch(std::size_t words, std::size_t depth_cap)
        : words_n(words), buf(words * (depth_cap + 1), 0) {}
    std::uint64_t* level(std::size_t d) { return buf.data() + d * words_n; }
};

// Counts cliques by size. Candidates hold only indices above every vertex of
// the clique built so far, so each clique is visited exactly once.
void count_rec(const kernels::BitMatrix& adj, std::uint64_t* cand, std::size_t depth,
               std::size_t size_cap, Scratch& scratch,
               std::vector<std::uint64_t>& counts) {
    if (depth + 1 > size_cap) {
        throw ResourceCapError("clique larger than the configured size cap", size_cap);
    }
    if (counts.size() < depth + 1) counts.resize(depth + 1, 0);
    const std::size_t words_n = scratch.words_n;
    for_each_bit(cand, words_n, [&](std::size_t v) {
        cand[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        ++counts[depth];
        std::uint64_t* next = scratch.level(depth + 1);
        for (std::size_t w = 0; w < words_n; ++w) next[w] = cand[w] & adj.row(v)[w];
        if (!all_zero(next, words_n)) {
            count_rec(adj, next, depth + 1, size_cap, scratch, counts);
        }
    });
}

// Largest clique inside the subgraph induced on cand; plain branch-and-bound
// with the candidate-count pruning rule.
void max_clique_rec(const kernels::BitMatrix& adj, std::uint64_t* cand, std::size_t size,
                    Scratch& scratch, std::size_t& best) {
    const std::size_t words_n = scratch.words_n;
    if (all_zero(cand, words_n)) {
        if (size > best) best = size;
        return;
    }
    for (std::size_t w = 0; w < words_n; ++w) {
        while (cand[w]) {
            if (size + popcount_words(cand + w, words_n - w) <= best) return;
            unsigned b = std::countr_zero(cand[w]);
            std::size_t v = w * 64 + b;
            cand[w] &= cand[w] - 1;
            // cand already excludes v and every vertex tried before it.
            std::uint64_t* next = scratch.level(size + 1);
            for (std::size_t u = 0; u < words_n; ++u) next[u] = cand[u] & adj.row(v)[u];
            max_clique_rec(adj, next, size + 1, scratch, best);
        }
    }
    if (size > best) best = size;
}

}  // namespace

RipsComplex build_rips(const PointCloud& cloud, double r) {
    check_radius(r);
    RipsComplex cx;
    cx.vertex_count = cloud.size();
    cx.parameter_r = r;
    if (cloud.empty()) return cx;

    kernels::BitMatrix adj = kernels::adjacency(cloud, r);
    const std::size_t n = adj.n;
    const std::size_t words_n = adj.words_per_row;
    std::vector<std::uint64_t> common(words_n);

    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* row_i = adj.row(i);
        for_each_bit(row_i, words_n, [&](std::size_t j) {
            if (j <= i) return;
            cx.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
            and_above(row_i, adj.row(j), words_n, j, common.data());
            for_each_bit(common.data(), words_n, [&](std::size_t k) {
                cx.triangles.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j),
                                        static_cast<VertexId>(k)});
            });
        });
    }
    return cx;
}

std::vector<std::uint64_t> count_simplices_full(const PointCloud& cloud, double r,
                                                std::size_t size_cap) {
    check_radius(r);
    if (size_cap < 1) throw ParameterError("size cap must be at least 1");
    if (cloud.empty()) return {};

    kernels::BitMatrix adj = kernels::adjacency(cloud, r);
    const std::size_t n = adj.n;
    const std::size_t words_n = adj.words_per_row;
    std::size_t depth_cap = size_cap < n ? size_cap : n;
    Scratch scratch(words_n, depth_cap + 1);

    std::uint64_t* all = scratch.level(0);
    for (std::size_t i = 0; i < n; ++i) all[i >> 6] |= std::uint64_t(1) << (i & 63);

    std::vector<std::uint64_t> counts;
    count_rec(adj, all, 0, size_cap, scratch, counts);
    return counts;
}

std::size_t edge_height(const kernels::BitMatrix& adj, VertexId i, VertexId j,
                        const std::uint64_t* restrict_mask) {
    if (i >= adj.n || j >= adj.n || !adj.get(i, j)) {
        throw ParameterError("edge is not in the proximity graph");
    }
    const std::size_t words_n = adj.words_per_row;
    Scratch scratch(words_n, adj.n + 1);
    std::uint64_t* common = scratch.level(0);
    for (std::size_t w = 0; w < words_n; ++w) common[w] = adj.row(i)[w] & adj.row(j)[w];
    if (restrict_mask != nullptr) {
        // Candidate sets only shrink below, so masking the seed masks all.
        for (std::size_t w = 0; w < words_n; ++w) common[w] &= restrict_mask[w];
    }

    std::size_t best = 0;
    max_clique_rec(adj, common, 0, scratch, best);
    return 2 + best;
}

}  // namespace covtree
