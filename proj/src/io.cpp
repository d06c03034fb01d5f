#include "covtree/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "covtree/error.hpp"

namespace covtree {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& token, std::size_t line_no) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParameterError("line " + std::to_string(line_no) + ": bad number \"" + token +
                             "\"");
    }
    return value;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
    throw ParameterError("line " + std::to_string(line_no) + ": " + what);
}

std::string index_list(const std::vector<VertexId>& xs) {
    std::string s;
    for (VertexId v : xs) {
        s += ' ';
        s += std::to_string(v);
    }
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string format_stat(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string format_cloud(const PointCloud& cloud) {
    std::ostringstream out;
    out << "# side_a=" << format_double(cloud.geom.side) << " boundary="
        << (cloud.geom.boundary == Boundary::torus ? "torus" : "plane") << " metric="
        << (cloud.geom.norm == Norm::uniform ? "uniform" : "euclidean") << "\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        out << format_double(cloud.xs[i]) << ',' << format_double(cloud.ys[i]) << "\n";
    }
    return out.str();
}

PointCloud parse_cloud(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    PointCloud cloud;

    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (!have_header) {
            if (line[0] != '#') bad_line(line_no, "expected the \"# side_a=...\" header");
            std::istringstream header(line.substr(1));
            std::string token;
            bool saw_side = false, saw_boundary = false, saw_metric = false;
            while (header >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos) bad_line(line_no, "bad header token " + token);
                std::string key = token.substr(0, eq);
                std::string value = token.substr(eq + 1);
                if (key == "side_a") {
                    cloud.geom.side = parse_number(value, line_no);
                    if (!(cloud.geom.side > 0.0)) bad_line(line_no, "side_a must be positive");
                    saw_side = true;
                } else if (key == "boundary") {
                    if (value == "plane") cloud.geom.boundary = Boundary::plane;
                    else if (value == "torus") cloud.geom.boundary = Boundary::torus;
                    else bad_line(line_no, "boundary must be plane or torus");
                    saw_boundary = true;
                } else if (key == "metric") {
                    if (value == "euclidean") cloud.geom.norm = Norm::euclidean;
                    else if (value == "uniform") cloud.geom.norm = Norm::uniform;
                    else bad_line(line_no, "metric must be euclidean or uniform");
                    saw_metric = true;
                } else {
                    bad_line(line_no, "unknown header key " + key);
                }
            }
            if (!saw_side || !saw_boundary || !saw_metric) {
                bad_line(line_no, "header must set side_a, boundary, and metric");
            }
            have_header = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) bad_line(line_no, "expected \"x,y\"");
        double x = parse_number(trim(line.substr(0, comma)), line_no);
        double y = parse_number(trim(line.substr(comma + 1)), line_no);
        if (!(x >= 0.0) || x >= cloud.geom.side || !(y >= 0.0) || y >= cloud.geom.side) {
            bad_line(line_no, "coordinate outside [0, side_a)");
        }
        cloud.push_back(x, y);
    }
    if (!have_header) throw ParameterError("cloud text has no header line");
    return cloud;
}

std::string format_tree(const Tree& tree) {
    std::ostringstream out;
    std::vector<char> member(tree.parent.size(), 0);
    for (VertexId v : tree.members) member[v] = 1;
    for (std::size_t v = 0; v < tree.parent.size(); ++v) {
        if (!member[v]) continue;
        out << v << ',';
        if (static_cast<VertexId>(v) == tree.root) out << '-';
        else out << tree.parent[v];
        out << ",0," << tree.depth[v] << "\n";
    }
    out << "rejected:" << index_list(tree.rejected) << "\n";
    out << "unreachable:" << index_list(tree.unreachable) << "\n";
    return out.str();
}

std::string format_forest(const Forest& forest) {
    std::size_t n = 0;
    for (const Tree& t : forest.trees) {
        if (t.parent.size() > n) n = t.parent.size();
    }
    std::vector<std::ptrdiff_t> tree_of(n, -1);
    for (std::size_t id = 0; id < forest.trees.size(); ++id) {
        for (VertexId v : forest.trees[id].members) tree_of[v] = static_cast<std::ptrdiff_t>(id);
    }
    std::ostringstream out;
    for (std::size_t v = 0; v < n; ++v) {
        if (tree_of[v] < 0) continue;
        const Tree& t = forest.trees[tree_of[v]];
        out << v << ',';
        if (static_cast<VertexId>(v) == t.root) out << '-';
        else out << t.parent[v];
        out << ',' << tree_of[v] << ',' << t.depth[v] << "\n";
    }
    out << "rejected:" << index_list(forest.rejected) << "\n";
    out << "unreachable:" << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ParameterError("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace covtree
