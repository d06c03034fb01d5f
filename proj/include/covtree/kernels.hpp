#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covtree/geometry.hpp"

namespace covtree {

/// Low-level batch primitives behind complex construction and coverage
/// sampling. Two implementations exist, plain scalar code and an AVX2
/// variant, selected once at startup; both produce bit-identical results
/// because they perform the same IEEE operations per element.
namespace kernels {

enum class Backend { scalar, avx2 };

/// Backend chosen at startup: AVX2 when the CPU supports it, overridable via
/// the COVTREE_KERNELS environment variable ("scalar" or "avx2").
Backend active_backend();

/// Force a backend, for equivalence tests. Throws ParameterError if the
/// requested backend is not usable on this machine.
void set_backend(Backend b);

/// True if the AVX2 variant can run on this CPU.
bool avx2_supported();

/// Word-packed bit rows, one row per vertex, row-major with stride
/// words_per_row. Bit j of row i = pair (i, j) satisfies the predicate.
struct BitMatrix {
    std::size_t n = 0;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> words;

    void resize(std::size_t n_rows) {
        n = n_rows;
        words_per_row = (n_rows + 63) / 64;
        words.assign(n * words_per_row, 0);
    }
    std::uint64_t* row(std::size_t i) { return words.data() + i * words_per_row; }
    const std::uint64_t* row(std::size_t i) const { return words.data() + i * words_per_row; }
    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
};

/// Adjacency of the strict-radius graph: bit (i, j) set iff i != j and
/// d(p_i, p_j) < r. Symmetric, zero diagonal.
BitMatrix adjacency(const PointCloud& cloud, double r);

/// out[j] = 1 byte flag: d((px, py), (xs[j], ys[j])) <= rho (closed disk).
/// Same wrapping and norm rules as distance(). Writes count entries.
void cover_flags(double px, double py, const double* xs, const double* ys,
                 std::size_t count, const Geometry& geom, double rho,
                 std::uint8_t* out);

/// dst[w] ^= src[w] for words words. The GF(2) column elimination step.
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

}  // namespace kernels
}  // namespace covtree
