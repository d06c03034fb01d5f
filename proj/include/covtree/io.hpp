#pragma once

#include <string>

#include "covtree/geometry.hpp"
#include "covtree/spanning.hpp"

namespace covtree {

/// Shortest decimal form that parses back to the same double ("%.17g" wide
/// when needed); used wherever exact round-trips matter.
std::string format_double(double v);

/// Fixed nine-significant-digit form for report values.
std::string format_stat(double v);

/// Cloud text format: header "# side_a=<v> boundary=<plane|torus>
/// metric=<euclidean|uniform>", then one "x,y" line per point in vertex
/// order. Coordinates round-trip exactly.
std::string format_cloud(const PointCloud& cloud);

/// Inverse of format_cloud. Blank lines are ignored; anything malformed,
/// out-of-domain coordinates included, is a parameter error naming the line.
PointCloud parse_cloud(const std::string& text);

/// Tree/forest text format: one "index,parent_index,tree_id,depth" line per
/// tree vertex, ascending index, "-" as the root's parent, then a trailer
/// with the rejected and unreachable vertex lists.
std::string format_tree(const Tree& tree);
std::string format_forest(const Forest& forest);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace covtree
