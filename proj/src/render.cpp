#include "covtree/render.hpp"

#include <cstdio>
#include <sstream>

namespace covtree {
namespace {

constexpr double kMargin = 16.0;

const char* const kPalette[] = {"#1f6fb2", "#d1495b", "#3a9d6c", "#b27c1f", "#7a5bb2",
                                "#2a9d9d", "#b25b9a", "#6c8c21", "#b2502a", "#4662d7"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

struct Mapper {
    double scale;
    double span;
    explicit Mapper(double side, double canvas)
        : scale((canvas - 2 * kMargin) / side), span(canvas) {}
    double x(double v) const { return kMargin + v * scale; }
    double y(double v) const { return span - kMargin - v * scale; }
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void open_svg(std::ostringstream& out, double canvas) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(canvas)
        << "\" height=\"" << px(canvas) << "\" viewBox=\"0 0 " << px(canvas) << ' '
        << px(canvas) << "\">\n"
        << "<style>\n"
        << ".tri { fill: #9ecbe8; fill-opacity: 0.45; stroke: none; }\n"
        << ".edge { stroke: #8aa0ad; stroke-width: 1; }\n"
        << ".tree-edge { stroke: #17324a; stroke-width: 2.5; }\n"
        << ".vertex { fill: #17324a; }\n"
        << ".rejected { fill: #d1495b; }\n"
        << ".unreachable { fill: #b8b8b8; }\n"
        << ".root-ring { fill: none; stroke: #17324a; stroke-width: 2; }\n"
        << "</style>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

void draw_complex(std::ostringstream& out, const PointCloud& cloud, const RipsComplex& cx,
                  const Mapper& map, const RenderOptions& opt) {
    if (opt.draw_triangles) {
        for (const auto& t : cx.triangles) {
            out << "<polygon class=\"tri\" points=\"";
            for (int c = 0; c < 3; ++c) {
                if (c) out << ' ';
                out << px(map.x(cloud.xs[t[c]])) << ',' << px(map.y(cloud.ys[t[c]]));
            }
            out << "\"/>\n";
        }
    }
    if (opt.draw_edges) {
        for (const auto& [i, j] : cx.edges) {
            out << "<line class=\"edge\" x1=\"" << px(map.x(cloud.xs[i])) << "\" y1=\""
                << px(map.y(cloud.ys[i])) << "\" x2=\"" << px(map.x(cloud.xs[j]))
                << "\" y2=\"" << px(map.y(cloud.ys[j])) << "\"/>\n";
        }
    }
}

void draw_tree_edges(std::ostringstream& out, const PointCloud& cloud, const Tree& tree,
                     const Mapper& map, const char* color) {
    for (const auto& [p, c] : tree.tree_edges) {
        out << "<line class=\"tree-edge\"";
        if (color != nullptr) out << " style=\"stroke: " << color << "\"";
        out << " x1=\"" << px(map.x(cloud.xs[p])) << "\" y1=\"" << px(map.y(cloud.ys[p]))
            << "\" x2=\"" << px(map.x(cloud.xs[c])) << "\" y2=\""
            << px(map.y(cloud.ys[c])) << "\"/>\n";
    }
}

void draw_vertex(std::ostringstream& out, const PointCloud& cloud, VertexId v,
                 const Mapper& map, const char* cls, const char* color) {
    out << "<circle class=\"" << cls << "\"";
    if (color != nullptr) out << " style=\"fill: " << color << "\"";
    out << " cx=\"" << px(map.x(cloud.xs[v])) << "\" cy=\"" << px(map.y(cloud.ys[v]))
        << "\" r=\"3.5\"/>\n";
}

void draw_root_ring(std::ostringstream& out, const PointCloud& cloud, VertexId v,
                    const Mapper& map) {
    out << "<circle class=\"root-ring\" cx=\"" << px(map.x(cloud.xs[v])) << "\" cy=\""
        << px(map.y(cloud.ys[v])) << "\" r=\"7\"/>\n";
}

}  // namespace

std::string render_svg(const PointCloud& cloud, const RipsComplex& cx,
                       const RenderOptions& opt) {
    std::ostringstream out;
    open_svg(out, opt.canvas_px);
    Mapper map(cloud.geom.side, opt.canvas_px);
    draw_complex(out, cloud, cx, map, opt);
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        draw_vertex(out, cloud, static_cast<VertexId>(v), map, "vertex", nullptr);
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const PointCloud& cloud, const RipsComplex& cx, const Tree& tree,
                       const RenderOptions& opt) {
    std::ostringstream out;
    open_svg(out, opt.canvas_px);
    Mapper map(cloud.geom.side, opt.canvas_px);
    draw_complex(out, cloud, cx, map, opt);
    draw_tree_edges(out, cloud, tree, map, nullptr);

    std::vector<char> cls(cloud.size(), 0);  // 0 member, 1 rejected, 2 unreachable
    for (VertexId v : tree.rejected) cls[v] = 1;
    for (VertexId v : tree.unreachable) cls[v] = 2;
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        const char* name = cls[v] == 0 ? "vertex" : (cls[v] == 1 ? "rejected" : "unreachable");
        draw_vertex(out, cloud, static_cast<VertexId>(v), map, name, nullptr);
    }
    draw_root_ring(out, cloud, tree.root, map);
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const PointCloud& cloud, const RipsComplex& cx, const Forest& forest,
                       const RenderOptions& opt) {
    std::ostringstream out;
    open_svg(out, opt.canvas_px);
    Mapper map(cloud.geom.side, opt.canvas_px);
    draw_complex(out, cloud, cx, map, opt);

    for (std::size_t id = 0; id < forest.trees.size(); ++id) {
        draw_tree_edges(out, cloud, forest.trees[id], map, kPalette[id % kPaletteSize]);
    }
    std::vector<const char*> color_of(cloud.size(), nullptr);
    for (std::size_t id = 0; id < forest.trees.size(); ++id) {
        for (VertexId v : forest.trees[id].members) color_of[v] = kPalette[id % kPaletteSize];
    }
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        const bool assigned = color_of[v] != nullptr;
        draw_vertex(out, cloud, static_cast<VertexId>(v), map, assigned ? "vertex" : "rejected",
                    color_of[v]);
    }
    for (const Tree& t : forest.trees) draw_root_ring(out, cloud, t.root, map);
    out << "</svg>\n";
    return out.str();
}

}  // namespace covtree
