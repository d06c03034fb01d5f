#pragma once

#include <string>

#include "covtree/complex.hpp"
#include "covtree/spanning.hpp"

namespace covtree {

struct RenderOptions {
    double canvas_px = 640.0;
    bool draw_triangles = true;
    bool draw_edges = true;
};

/// Static SVG snapshot of the network: shaded triangles under the complex
/// edges, vertices on top. With a tree, its edges are drawn bold and
/// non-members (rejected, unreachable) get their own styles. With a forest,
/// each tree takes a palette color and every root is circled. Torus-wrapping
/// edges are drawn as straight segments.
std::string render_svg(const PointCloud& cloud, const RipsComplex& cx,
                       const RenderOptions& opt = {});
std::string render_svg(const PointCloud& cloud, const RipsComplex& cx, const Tree& tree,
                       const RenderOptions& opt = {});
std::string render_svg(const PointCloud& cloud, const RipsComplex& cx, const Forest& forest,
                       const RenderOptions& opt = {});

}  // namespace covtree
