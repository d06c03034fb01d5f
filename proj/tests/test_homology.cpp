#include <algorithm>
#include <numeric>
#include <vector>

#include "covtree/complex.hpp"
#include "covtree/error.hpp"
#include "covtree/homology.hpp"
#include "covtree/rng.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covtree;

TEST_CASE("betti numbers of the standard fixtures") {
    const RipsComplex hex = build_rips(fixtures::hexagon(), 1.2);
    CHECK(betti(hex).beta0 == 1);
    CHECK(betti(hex).beta1 == 1);

    const RipsComplex tri = build_rips(fixtures::filled_triangle(), 1.0);
    CHECK(betti(tri).beta0 == 1);
    CHECK(betti(tri).beta1 == 0);

    const RipsComplex two = build_rips(fixtures::two_hexagons_bridged(), 1.2);
    CHECK(betti(two).beta0 == 1);
    CHECK(betti(two).beta1 == 2);

    PointCloud pairs;
    pairs.geom.side = 10.0;
    pairs.push_back(1.0, 1.0);
    pairs.push_back(1.5, 1.0);
    pairs.push_back(8.0, 8.0);
    pairs.push_back(8.5, 8.0);
    const RipsComplex disj = build_rips(pairs, 1.0);
    CHECK(betti(disj).beta0 == 2);
    CHECK(betti(disj).beta1 == 0);
}

TEST_CASE("boundary matrices have the right shape and ordering") {
    const RipsComplex cx = build_rips(fixtures::filled_triangle(), 1.0);
    const BoundaryMatrix d1 = boundary_matrix(cx, 1);
    CHECK(d1.rows == 3);
    CHECK(d1.cols == 3);
    CHECK(d1.degree_k == 1);
    for (const auto& col : d1.columns) CHECK(col.size() == 2);

    const BoundaryMatrix d2 = boundary_matrix(cx, 2);
    CHECK(d2.rows == 3);
    CHECK(d2.cols == 1);
    REQUIRE(d2.columns[0].size() == 3);
    CHECK(std::is_sorted(d2.columns[0].begin(), d2.columns[0].end()));
    CHECK(rank_gf2(d1) == 2);
    CHECK(rank_gf2(d2) == 1);
}

TEST_CASE("d1 composed with d2 vanishes over GF(2)") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PointCloud cloud =
            sample_binomial(35, 5.0, Boundary::torus, Norm::euclidean, seed);
        const RipsComplex cx = build_rips(cloud, 1.3);
        if (cx.triangles.empty()) continue;
        const BoundaryMatrix d1 = boundary_matrix(cx, 1);
        const BoundaryMatrix d2 = boundary_matrix(cx, 2);
        bool all_zero = true;
        for (const auto& tcol : d2.columns) {
            std::vector<int> vertex_parity(cx.vertex_count, 0);
            for (std::uint32_t edge_row : tcol) {
                for (std::uint32_t v : d1.columns[edge_row]) vertex_parity[v] ^= 1;
            }
            all_zero = all_zero &&
                       std::accumulate(vertex_parity.begin(), vertex_parity.end(), 0) == 0;
        }
        CHECK(all_zero);
    }
}

TEST_CASE("beta0 agrees with union-find components") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const PointCloud cloud =
            sample_binomial(30, 6.0, Boundary::plane, Norm::euclidean, seed);
        const RipsComplex cx = build_rips(cloud, 1.0);
        CHECK(betti(cx).beta0 == connected_components(cx));
    }
}

TEST_CASE("euler characteristic identity from ranks") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PointCloud cloud =
            sample_binomial(32, 5.0, Boundary::torus, Norm::uniform, seed);
        const RipsComplex cx = build_rips(cloud, 1.2);
        const BettiProfile bp = betti(cx);
        const std::size_t rank2 = rank_gf2(boundary_matrix(cx, 2));
        const long chi_counts = static_cast<long>(cx.vertex_count) -
                                static_cast<long>(cx.edges.size()) +
                                static_cast<long>(cx.triangles.size());
        const long chi_betti = static_cast<long>(bp.beta0) - static_cast<long>(bp.beta1) +
                               static_cast<long>(cx.triangles.size() - rank2);
        CHECK(chi_counts == chi_betti);
    }
}

TEST_CASE("betti numbers are invariant under vertex relabeling") {
    const PointCloud cloud = sample_binomial(40, 5.0, Boundary::plane, Norm::euclidean, 12);
    const BettiProfile base = betti(build_rips(cloud, 1.3));

    std::vector<VertexId> perm(cloud.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rng shuffler(77);
    for (std::size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[shuffler.uniform_index(i)]);
    }
    const PointCloud shuffled = subset_cloud(cloud, perm);
    const BettiProfile after = betti(build_rips(shuffled, 1.3));
    CHECK(base.beta0 == after.beta0);
    CHECK(base.beta1 == after.beta1);
}

TEST_CASE("a complex missing a face is rejected") {
    RipsComplex cx;
    cx.vertex_count = 3;
    cx.edges = {{0, 1}, {0, 2}};  // (1,2) missing
    cx.triangles = {{0, 1, 2}};
    cx.parameter_r = 1.0;
    CHECK_THROWS_AS(boundary_matrix(cx, 2), ParameterError);
}
