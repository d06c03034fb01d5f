#include <cstdio>
#include <string>

#include "covtree/error.hpp"
#include "covtree/io.hpp"
#include "covtree/rng.hpp"
#include "covtree/spanning.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covtree;

TEST_CASE("format_double emits shortest round-trip text") {
    CHECK(format_double(10.0) == "10");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    Rng r(123);
    for (int i = 0; i < 500; ++i) {
        const double v = r.uniform_to(100.0);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("cloud text round trip preserves every bit") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Boundary b = seed % 2 ? Boundary::torus : Boundary::plane;
        const Norm nm = seed % 3 ? Norm::euclidean : Norm::uniform;
        const PointCloud cloud = sample_binomial(40, 7.5, b, nm, seed);
        const PointCloud back = parse_cloud(format_cloud(cloud));
        CHECK(back.xs == cloud.xs);
        CHECK(back.ys == cloud.ys);
        CHECK(back.geom.side == cloud.geom.side);
        CHECK(back.geom.boundary == cloud.geom.boundary);
        CHECK(back.geom.norm == cloud.geom.norm);
    }
}

TEST_CASE("cloud parser accepts blanks and rejects malformed input") {
    PointCloud ok = parse_cloud(
        "# side_a=5 boundary=torus metric=uniform\n"
        "\n"
        "  1.5,2.5  \n"
        "0,4.999\n");
    CHECK(ok.size() == 2);
    CHECK(ok.geom.boundary == Boundary::torus);
    CHECK(ok.xs[1] == 0.0);

    CHECK_THROWS_AS(parse_cloud("1,2\n"), ParameterError);  // no header
    CHECK_THROWS_AS(parse_cloud("# side_a=5 boundary=torus\n1,2\n"), ParameterError);
    CHECK_THROWS_AS(parse_cloud("# side_a=0 boundary=plane metric=euclidean\n"),
                    ParameterError);
    CHECK_THROWS_AS(
        parse_cloud("# side_a=5 boundary=plane metric=euclidean\n5.0,1\n"),
        ParameterError);  // x == side is outside [0, side)
    CHECK_THROWS_AS(
        parse_cloud("# side_a=5 boundary=plane metric=euclidean\n1;2\n"),
        ParameterError);
    CHECK_THROWS_AS(
        parse_cloud("# side_a=5 boundary=plane metric=euclidean\n1,2,3\n"),
        ParameterError);
}

TEST_CASE("tree serialization of the hexagon oracle") {
    const PointCloud cloud = fixtures::hexagon();
    const Tree t = build_tree(cloud, 1.2, WeightMetric::min_distance, VertexId{0}, 1);
    const std::string want =
        "0,-,0,0\n"
        "1,0,0,1\n"
        "2,1,0,2\n"
        "3,2,0,3\n"
        "5,0,0,1\n"
        "rejected: 4\n"
        "unreachable:\n";
    CHECK(format_tree(t) == want);
}

TEST_CASE("forest serialization lists every tree") {
    PointCloud cloud;
    cloud.geom.side = 10.0;
    cloud.push_back(1.0, 1.0);
    cloud.push_back(1.5, 1.0);
    cloud.push_back(8.0, 8.0);
    const Forest f = build_forest(cloud, 1.0, WeightMetric::min_distance, 2, 1);
    REQUIRE(f.trees.size() == 2);
    const std::string text = format_forest(f);
    // Each vertex appears once with its tree id; ids follow build order.
    CHECK(text.find("rejected:\n") != std::string::npos);
    CHECK(text.find("unreachable:\n") != std::string::npos);
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == 5);  // 3 vertex lines + 2 trailers
}

TEST_CASE("text files round trip and missing files throw") {
    const std::string path = "/tmp/covtree_io_test.txt";
    write_text_file(path, "alpha\nbeta\n");
    CHECK(read_text_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("/tmp/covtree_does_not_exist_5812"), ParameterError);
    CHECK_THROWS_AS(write_text_file("/tmp/no_such_dir_5812/x.txt", "y"), ParameterError);
}
