#include <algorithm>
#include <set>
#include <utility>

#include "covtree/complex.hpp"
#include "covtree/error.hpp"
#include "covtree/kernels.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covtree;

TEST_CASE("hexagon at r=1.2 is the plain 6-cycle") {
    const PointCloud cloud = fixtures::hexagon();
    const RipsComplex cx = build_rips(cloud, 1.2);
    CHECK(cx.vertex_count == 6);
    CHECK(cx.parameter_r == 1.2);
    REQUIRE(cx.edges.size() == 6);
    CHECK(cx.triangles.empty());
    const std::vector<std::pair<VertexId, VertexId>> want{{0, 1}, {0, 5}, {1, 2},
                                                          {2, 3}, {3, 4}, {4, 5}};
    CHECK(cx.edges == want);
}

TEST_CASE("filled triangle counts") {
    const PointCloud cloud = fixtures::filled_triangle();
    const RipsComplex cx = build_rips(cloud, 1.0);
    CHECK(cx.edges.size() == 3);
    REQUIRE(cx.triangles.size() == 1);
    CHECK(cx.triangles[0] == std::array<VertexId, 3>{0, 1, 2});
    CHECK(count_simplices_full(cloud, 1.0, 16) == std::vector<std::uint64_t>{3, 3, 1});
}

TEST_CASE("degenerate inputs") {
    PointCloud empty;
    empty.geom.side = 10.0;
    CHECK(build_rips(empty, 1.0).edges.empty());
    CHECK(count_simplices_full(empty, 1.0, 8).empty());

    PointCloud one;
    one.geom.side = 10.0;
    one.push_back(2.0, 2.0);
    CHECK(count_simplices_full(one, 1.0, 8) == std::vector<std::uint64_t>{1});

    CHECK_THROWS_AS(build_rips(one, 0.0), ParameterError);
    CHECK_THROWS_AS(build_rips(one, -2.0), ParameterError);
}

TEST_CASE("edges use a strict threshold") {
    PointCloud cloud;
    cloud.geom.side = 10.0;
    cloud.push_back(1.0, 1.0);
    cloud.push_back(1.0, 3.0);
    CHECK(build_rips(cloud, 2.0).edges.empty());
    CHECK(build_rips(cloud, 2.0 + 1e-9).edges.size() == 1);
}

TEST_CASE("face closure and count agreement on random clouds") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Boundary b = seed % 2 ? Boundary::torus : Boundary::plane;
        const Norm nm = seed % 3 ? Norm::euclidean : Norm::uniform;
        const PointCloud cloud = sample_binomial(30, 5.0, b, nm, seed);
        const RipsComplex cx = build_rips(cloud, 1.4);

        std::set<std::pair<VertexId, VertexId>> edge_set(cx.edges.begin(), cx.edges.end());
        bool closed = true;
        for (const auto& t : cx.triangles) {
            closed = closed && edge_set.count({t[0], t[1]}) && edge_set.count({t[0], t[2]}) &&
                     edge_set.count({t[1], t[2]});
        }
        CHECK(closed);
        CHECK(std::is_sorted(cx.edges.begin(), cx.edges.end()));

        const auto counts = count_simplices_full(cloud, 1.4, 64);
        const std::uint64_t s1 = counts.size() > 1 ? counts[1] : 0;
        const std::uint64_t s2 = counts.size() > 2 ? counts[2] : 0;
        CHECK(counts[0] == 30);
        CHECK(s1 == cx.edges.size());
        CHECK(s2 == cx.triangles.size());
    }
}

TEST_CASE("simplex counts grow with the radius") {
    const PointCloud cloud = sample_binomial(40, 5.0, Boundary::torus, Norm::euclidean, 5);
    const auto small = count_simplices_full(cloud, 0.9, 64);
    const auto large = count_simplices_full(cloud, 1.3, 64);
    REQUIRE(large.size() >= small.size());
    for (std::size_t k = 0; k < small.size(); ++k) CHECK(small[k] <= large[k]);

    const RipsComplex a = build_rips(cloud, 0.9);
    const RipsComplex b = build_rips(cloud, 1.3);
    const std::set<std::pair<VertexId, VertexId>> eb(b.edges.begin(), b.edges.end());
    bool subset = true;
    for (const auto& e : a.edges) subset = subset && eb.count(e) > 0;
    CHECK(subset);
}

TEST_CASE("clique size cap throws ResourceCapError") {
    PointCloud cloud;
    cloud.geom.side = 10.0;
    for (int i = 0; i < 6; ++i) cloud.push_back(5.0 + i * 1e-4, 5.0);
    CHECK(count_simplices_full(cloud, 0.5, 6) ==
          std::vector<std::uint64_t>{6, 15, 20, 15, 6, 1});
    try {
        count_simplices_full(cloud, 0.5, 5);
        FAIL("expected ResourceCapError");
    } catch (const ResourceCapError& e) {
        CHECK(e.cap == 5);
    }
}

TEST_CASE("edge_height is the largest clique through the edge") {
    const PointCloud hex = fixtures::hexagon();
    const kernels::BitMatrix hex_adj = kernels::adjacency(hex, 1.2);
    CHECK(edge_height(hex_adj, 0, 1) == 2);

    const PointCloud tri = fixtures::filled_triangle();
    const kernels::BitMatrix tri_adj = kernels::adjacency(tri, 1.0);
    CHECK(edge_height(tri_adj, 0, 1) == 3);
    CHECK(edge_height(tri_adj, 0, 2) == 3);
    CHECK(edge_height(tri_adj, 1, 2) == 3);

    PointCloud k4;
    k4.geom.side = 10.0;
    k4.push_back(5.0, 5.0);
    k4.push_back(5.3, 5.0);
    k4.push_back(5.0, 5.3);
    k4.push_back(5.3, 5.3);
    const kernels::BitMatrix k4_adj = kernels::adjacency(k4, 1.0);
    CHECK(edge_height(k4_adj, 0, 3) == 4);

    // Masking vertex 3 away reduces the best clique through (0, 1) to a triangle.
    std::vector<std::uint64_t> mask{0b0111};
    CHECK(edge_height(k4_adj, 0, 1, mask.data()) == 3);
    CHECK(edge_height(k4_adj, 0, 1) == 4);

    CHECK_THROWS_AS(edge_height(hex_adj, 0, 3), ParameterError);
}
