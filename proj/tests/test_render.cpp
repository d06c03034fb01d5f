#include <string>

#include "covtree/complex.hpp"
#include "covtree/render.hpp"
#include "covtree/spanning.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covtree;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("complex rendering carries every simplex") {
    const PointCloud cloud = sample_binomial(40, 10.0, Boundary::plane, Norm::euclidean, 3);
    const RipsComplex cx = build_rips(cloud, 2.0);
    REQUIRE(!cx.triangles.empty());
    const std::string svg = render_svg(cloud, cx);

    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(svg, "<svg") == 1);
    CHECK(count_occurrences(svg, "</svg>") == 1);
    CHECK(count_occurrences(svg, "class=\"vertex\"") == cloud.size());
    CHECK(count_occurrences(svg, "class=\"edge\"") == cx.edges.size());
    CHECK(count_occurrences(svg, "class=\"tri\"") == cx.triangles.size());
}

TEST_CASE("tree rendering marks outcome classes") {
    const PointCloud cloud = fixtures::two_hexagons_bridged();
    const RipsComplex cx = build_rips(cloud, 1.2);
    const Tree t = build_tree(cloud, 1.2, WeightMetric::min_distance, VertexId{12}, 1);
    REQUIRE(t.rejected.size() == 2);
    const std::string svg = render_svg(cloud, cx, t);

    CHECK(count_occurrences(svg, "class=\"tree-edge\"") == t.tree_edges.size());
    CHECK(count_occurrences(svg, "class=\"rejected\"") == t.rejected.size());
    CHECK(count_occurrences(svg, "class=\"root-ring\"") == 1);
    CHECK(count_occurrences(svg, "class=\"vertex\"") ==
          cloud.size() - t.rejected.size() - t.unreachable.size());
}

TEST_CASE("forest rendering rings every root") {
    const PointCloud cloud = sample_binomial(50, 10.0, Boundary::plane, Norm::euclidean, 7);
    const RipsComplex cx = build_rips(cloud, 2.5);
    const Forest f = build_forest(cloud, 2.5, WeightMetric::min_distance, 2, 7);
    const std::string svg = render_svg(cloud, cx, f);
    CHECK(count_occurrences(svg, "class=\"root-ring\"") == f.trees.size());
    std::size_t edge_total = 0;
    for (const Tree& t : f.trees) edge_total += t.tree_edges.size();
    CHECK(count_occurrences(svg, "class=\"tree-edge\"") == edge_total);
}

TEST_CASE("rendering is deterministic") {
    const PointCloud cloud = sample_binomial(25, 10.0, Boundary::torus, Norm::euclidean, 9);
    const RipsComplex cx = build_rips(cloud, 2.0);
    CHECK(render_svg(cloud, cx) == render_svg(cloud, cx));
}

TEST_CASE("canvas size follows the options") {
    const PointCloud cloud = fixtures::filled_triangle();
    const RipsComplex cx = build_rips(cloud, 1.0);
    RenderOptions opt;
    opt.canvas_px = 200;
    const std::string svg = render_svg(cloud, cx, opt);
    CHECK(svg.find("width=\"200.00\"") != std::string::npos);
    CHECK(svg.find("height=\"200.00\"") != std::string::npos);
}
