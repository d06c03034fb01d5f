#include "kernels_common.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include "pair_predicate.hpp"

namespace covtree {
namespace kernels {
namespace detail {
namespace {

// Four lanes of exactly the scalar operation sequence: subtract, clear sign,
// fold, square/accumulate or max, compare. No fused multiply-add anywhere, so
// every lane rounds like the scalar backend and the results match bit for bit.

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

template <bool Torus>
inline __m256d fold_axis4(__m256d d, __m256d side) {
    __m256d a = _mm256_and_pd(d, kAbsMask);
    if constexpr (!Torus) return a;
    __m256d w = _mm256_sub_pd(side, a);
    return _mm256_min_pd(a, w);
}

template <bool Torus, bool Linf, bool Closed>
inline int pair_within4(__m256d px, __m256d py, const double* xs, const double* ys,
                        std::size_t j, __m256d side, __m256d bound) {
    __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs + j));
    __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys + j));
    __m256d ax = fold_axis4<Torus>(dx, side);
    __m256d ay = fold_axis4<Torus>(dy, side);
    __m256d v;
    if constexpr (Linf) {
        v = _mm256_max_pd(ax, ay);
    } else {
        v = _mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ay, ay));
    }
    __m256d hit = _mm256_cmp_pd(v, bound, Closed ? _CMP_LE_OQ : _CMP_LT_OQ);
    return _mm256_movemask_pd(hit);
}

template <bool Torus, bool Linf>
void adjacency_impl(const PointCloud& cloud, double r, BitMatrix& out) {
    const std::size_t n = cloud.size();
    const double side = cloud.geom.side;
    const double bound = Linf ? r : r * r;
    const double* xs = cloud.xs.data();
    const double* ys = cloud.ys.data();
    const __m256d side_v = _mm256_set1_pd(side);
    const __m256d bound_v = _mm256_set1_pd(bound);
    const std::size_t tail = n & ~std::size_t(3);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = xs[i];
        const double yi = ys[i];
        const __m256d xi_v = _mm256_set1_pd(xi);
        const __m256d yi_v = _mm256_set1_pd(yi);
        std::uint64_t* row = out.row(i);
        for (std::size_t j = 0; j < tail; j += 4) {
            int mask = pair_within4<Torus, Linf, false>(xi_v, yi_v, xs, ys, j, side_v,
                                                        bound_v);
            // j is a multiple of 4, so the nibble never straddles a word.
            row[j >> 6] |= std::uint64_t(mask) << (j & 63);
        }
        for (std::size_t j = tail; j < n; ++j) {
            bool hit = covtree::detail::pair_within<Torus, Linf, false>(
                xi - xs[j], yi - ys[j], side, bound);
            row[j >> 6] |= std::uint64_t(hit) << (j & 63);
        }
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
    const __m256d side_v = _mm256_set1_pd(side);
    const __m256d bound_v = _mm256_set1_pd(bound);
    const __m256d px_v = _mm256_set1_pd(px);
    const __m256d py_v = _mm256_set1_pd(py);
    const std::size_t tail = count & ~std::size_t(3);
    for (std::size_t j = 0; j < tail; j += 4) {
        int mask = pair_within4<Torus, Linf, true>(px_v, py_v, xs, ys, j, side_v, bound_v);
        out[j] = mask & 1;
        out[j + 1] = (mask >> 1) & 1;
        out[j + 2] = (mask >> 2) & 1;
        out[j + 3] = (mask >> 3) & 1;
    }
    for (std::size_t j = tail; j < count; ++j) {
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
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(d, s));
    }
    for (; w < words; ++w) dst[w] ^= src[w];
}

}  // namespace

const Vtable* avx2_vtable() {
    static const Vtable table{adjacency_entry, cover_entry, xor_entry};
    return &table;
}

}  // namespace detail
}  // namespace kernels
}  // namespace covtree

#else

namespace covtree {
namespace kernels {
namespace detail {

const Vtable* avx2_vtable() { return nullptr; }

}  // namespace detail
}  // namespace kernels
}  // namespace covtree

#endif
