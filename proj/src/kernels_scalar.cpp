#include "kernels_common.hpp"
#include "pair_predicate.hpp"

namespace covtree {
namespace kernels {
namespace detail {
namespace {

template <bool Torus, bool Linf>
void adjacency_impl(const PointCloud& cloud, double r, BitMatrix& out) {
    const std::size_t n = cloud.size();
    const double side = cloud.geom.side;
    const double bound = Linf ? r : r * r;
    const double* xs = cloud.xs.data();
    const double* ys = cloud.ys.data();
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = xs[i];
        const double yi = ys[i];
        std::uint64_t* row = out.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            bool hit = covtree::detail::pair_within<Torus, Linf, false>(
                xi - xs[j], yi - ys[j], side, bound);
            row[j >> 6] |= std::uint64_t(hit) << (j & 63);
        }
        // d(i, i) = 0 always passes the strict test; the graph has no loops.
        row[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
}

void adjacency_entry(const PointCloud& cloud, double r, BitMatrix& out) {
    bool torus = cloud.geom.boundary == Boundary::torus;
    bool linf = cloud.geom.norm == Norm::uniform;
    if (torus) {
        if (linf)
            adjacency_impl<true, true>(cloud, r, out);
        else
            adjacency_impl<true, false>(cloud, r, out);
    } else {
        if (linf)
            adjacency_impl<false, true>(cloud, r, out);
        else
            adjacency_impl<false, false>(cloud, r, out);
    }
}

template <bool Torus, bool Linf>
void cover_impl(double px, double py, const double* xs, const double* ys,
                std::size_t count, double side, double rho, std::uint8_t* out) {
    const double bound = Linf ? rho : rho * rho;
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = covtree::detail::pair_within<Torus, Linf, true>(px - xs[j], py - ys[j],
                                                                 side, bound);
    }
}

void cover_entry(double px, double py, const double* xs, const double* ys,
                 std::size_t count, const Geometry& geom, double rho, std::uint8_t* out) {
    bool torus = geom.boundary == Boundary::torus;
    bool linf = geom.norm == Norm::uniform;
    if (torus) {
        if (linf)
            cover_impl<true, true>(px, py, xs, ys, count, geom.side, rho, out);
        else
            cover_impl<true, false>(px, py, xs, ys, count, geom.side, rho, out);
    } else {
        if (linf)
            cover_impl<false, true>(px, py, xs, ys, count, geom.side, rho, out);
        else
            cover_impl<false, false>(px, py, xs, ys, count, geom.side, rho, out);
    }
}

void xor_entry(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
}

}  // namespace

const Vtable& scalar_vtable() {
    static const Vtable table{adjacency_entry, cover_entry, xor_entry};
    return table;
}

}  // namespace detail
}  // namespace kernels
}  // namespace covtree
