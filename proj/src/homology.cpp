#include "covtree/homology.hpp"

#include <numeric>
#include <unordered_map>

#include "covtree/error.hpp"
#include "covtree/kernels.hpp"
#include "gf2.hpp"

namespace covtree {
namespace {

std::uint64_t pack_edge(VertexId i, VertexId j) {
    return (std::uint64_t(i) << 32) | j;
}

}  // namespace

BoundaryMatrix boundary_matrix(const RipsComplex& cx, int k) {
    BoundaryMatrix m;
    m.degree_k = k;
    if (k == 1) {
        m.rows = cx.vertex_count;
        m.cols = cx.edges.size();
        m.columns.reserve(m.cols);
        for (const auto& [i, j] : cx.edges) {
            m.columns.push_back({i, j});
        }
        return m;
    }
    if (k != 2) throw ParameterError("boundary matrix degree must be 1 or 2");

    std::unordered_map<std::uint64_t, std::uint32_t> edge_index;
    edge_index.reserve(cx.edges.size() * 2);
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
        edge_index.emplace(pack_edge(cx.edges[e].first, cx.edges[e].second),
                           static_cast<std::uint32_t>(e));
    }
    auto lookup = [&](VertexId a, VertexId b) {
        auto it = edge_index.find(pack_edge(a, b));
        if (it == edge_index.end()) throw ParameterError("complex is not face-closed");
        return it->second;
    };

    m.rows = cx.edges.size();
    m.cols = cx.triangles.size();
    m.columns.reserve(m.cols);
    for (const auto& t : cx.triangles) {
        // Edge list order is lexicographic, so these three are ascending.
        m.columns.push_back({lookup(t[0], t[1]), lookup(t[0], t[2]), lookup(t[1], t[2])});
    }
    return m;
}

std::size_t rank_gf2(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const std::size_t words_n = (m.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> committed;
    std::vector<std::ptrdiff_t> pivot_col(m.rows, -1);
    std::vector<std::uint64_t> work(words_n);
    std::size_t rank = 0;

    for (const auto& col : m.columns) {
        std::fill(work.begin(), work.end(), 0);
        for (std::uint32_t rowix : col) gf2::set_bit(work.data(), rowix);
        std::ptrdiff_t low = gf2::lowest_one(work.data(), words_n);
        while (low >= 0 && pivot_col[low] >= 0) {
            kernels::xor_words(work.data(), committed[pivot_col[low]].data(), words_n);
            low = gf2::lowest_one(work.data(), words_n);
        }
        if (low >= 0) {
            pivot_col[low] = static_cast<std::ptrdiff_t>(committed.size());
            committed.push_back(work);
            ++rank;
        }
    }
    return rank;
}

BettiProfile betti(const RipsComplex& cx) {
    const std::size_t s0 = cx.vertex_count;
    const std::size_t s1 = cx.edges.size();
    const std::size_t rank1 = rank_gf2(boundary_matrix(cx, 1));
    const std::size_t rank2 = rank_gf2(boundary_matrix(cx, 2));
    BettiProfile b;
    b.beta0 = s0 - rank1;
    b.beta1 = (s1 - rank1) - rank2;
    return b;
}

std::size_t connected_components(const RipsComplex& cx) {
    std::vector<std::uint32_t> parent(cx.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::size_t components = cx.vertex_count;
    for (const auto& [i, j] : cx.edges) {
        std::uint32_t a = find(i);
        std::uint32_t b = find(j);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

}  // namespace covtree
