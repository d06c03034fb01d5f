#include "covtree/coverage.hpp"

#include <vector>

#include "covtree/error.hpp"
#include "covtree/kernels.hpp"
#include "covtree/rng.hpp"
#include "pair_predicate.hpp"

namespace covtree {
namespace {

// Up to this many points a straight vectorized scan over the whole set beats
// bucketing; beyond it probes consult a uniform grid of cells at least one
// disk radius wide, so a 3x3 neighborhood is exhaustive under either norm.
constexpr std::size_t kFlatScanLimit = 128;

bool probe_hits(const Point& probe, const PointCloud& pts, std::size_t idx, double side,
                bool torus, bool linf, double bound) {
    double dx = probe.x - pts.xs[idx];
    double dy = probe.y - pts.ys[idx];
    if (torus) {
        if (linf) return detail::pair_within<true, true, true>(dx, dy, side, bound);
        return detail::pair_within<true, false, true>(dx, dy, side, bound);
    }
    if (linf) return detail::pair_within<false, true, true>(dx, dy, side, bound);
    return detail::pair_within<false, false, true>(dx, dy, side, bound);
}

struct Grid {
    std::size_t m = 1;
    double cell_w = 0.0;
    // CSR layout: cell (cx, cy) holds point indices entries[start[cx*m+cy] ..
    // start[cx*m+cy+1]).
    std::vector<std::uint32_t> start;
    std::vector<std::uint32_t> entries;

    Grid(const PointCloud& pts, double rho) {
        const double side = pts.geom.side;
        m = static_cast<std::size_t>(side / rho);
        // Keep the cell table near the point count; coarser cells stay
        // correct because a cell is never narrower than the disk radius.
        std::size_t m_cap = 1;
        while (m_cap * m_cap < pts.size()) ++m_cap;
        if (m > m_cap) m = m_cap;
        if (m < 1) m = 1;
        cell_w = side / static_cast<double>(m);
        std::vector<std::uint32_t> counts(m * m + 1, 0);
        std::vector<std::uint32_t> cell_of(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cell_of[i] = cell_index(pts.xs[i]) * m + cell_index(pts.ys[i]);
            ++counts[cell_of[i] + 1];
        }
        for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
        start = counts;
        entries.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            entries[counts[cell_of[i]]++] = static_cast<std::uint32_t>(i);
        }
    }

    std::size_t cell_index(double coord) const {
        auto c = static_cast<std::size_t>(coord / cell_w);
        return c < m ? c : m - 1;
    }
};

}  // namespace

CoverageEstimate covered_area(const PointCloud& points, double disk_radius,
                              std::size_t samples, std::uint64_t seed) {
    if (!(disk_radius > 0.0)) throw ParameterError("disk radius must be positive");
    if (samples < 1) throw ParameterError("sample count must be at least 1");

    CoverageEstimate est;
    est.sample_count = samples;
    est.disk_radius = disk_radius;
    if (points.empty()) return est;

    const Geometry& geom = points.geom;
    const bool torus = geom.boundary == Boundary::torus;
    const bool linf = geom.norm == Norm::uniform;
    const double bound = linf ? disk_radius : disk_radius * disk_radius;
    Rng rng(derive_seed(seed, seed_stream::probe));
    std::size_t hits = 0;

    if (points.size() <= kFlatScanLimit) {
        // Chunked scan: most probes are covered by an early point, so testing
        // a vector-width block at a time and stopping on the first hit beats
        // flagging the whole cloud per probe.
        constexpr std::size_t kChunk = 32;
        std::uint8_t flags[kChunk];
        for (std::size_t s = 0; s < samples; ++s) {
            double px = rng.uniform_to(geom.side);
            double py = rng.uniform_to(geom.side);
            for (std::size_t base = 0; base < points.size(); base += kChunk) {
                const std::size_t count = std::min(kChunk, points.size() - base);
                kernels::cover_flags(px, py, points.xs.data() + base,
                                     points.ys.data() + base, count, geom, disk_radius,
                                     flags);
                bool any = false;
                for (std::size_t i = 0; i < count; ++i) any = any || flags[i] != 0;
                if (any) {
                    ++hits;
                    break;
                }
            }
        }
    } else {
        Grid grid(points, disk_radius);
        const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(grid.m);
        for (std::size_t s = 0; s < samples; ++s) {
            Point probe{rng.uniform_to(geom.side), rng.uniform_to(geom.side)};
            const std::ptrdiff_t cx = static_cast<std::ptrdiff_t>(grid.cell_index(probe.x));
            const std::ptrdiff_t cy = static_cast<std::ptrdiff_t>(grid.cell_index(probe.y));
            bool covered = false;
            for (std::ptrdiff_t dx = -1; dx <= 1 && !covered; ++dx) {
                std::ptrdiff_t gx = cx + dx;
                if (torus) {
                    gx = (gx + m) % m;
                } else if (gx < 0 || gx >= m) {
                    continue;
                }
                for (std::ptrdiff_t dy = -1; dy <= 1 && !covered; ++dy) {
                    std::ptrdiff_t gy = cy + dy;
                    if (torus) {
                        gy = (gy + m) % m;
                    } else if (gy < 0 || gy >= m) {
                        continue;
                    }
                    const std::size_t cell = static_cast<std::size_t>(gx * m + gy);
                    for (std::uint32_t e = grid.start[cell]; e < grid.start[cell + 1]; ++e) {
                        if (probe_hits(probe, points, grid.entries[e], geom.side, torus,
                                       linf, bound)) {
                            covered = true;
                            break;
                        }
                    }
                }
            }
            if (covered) ++hits;
        }
    }
    est.covered_fraction = static_cast<double>(hits) / static_cast<double>(samples);
    return est;
}

CoverageComparison coverage_loss(const PointCloud& cloud, const Tree& tree,
                                 double disk_radius, std::size_t samples,
                                 std::uint64_t seed) {
    CoverageComparison cmp;
    cmp.before = covered_area(cloud, disk_radius, samples, seed);
    cmp.after = covered_area(subset_cloud(cloud, tree.members), disk_radius, samples, seed);
    return cmp;
}

}  // namespace covtree
