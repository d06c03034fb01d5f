#pragma once

#include <cstddef>
#include <cstdint>

#include "covtree/kernels.hpp"

namespace covtree {
namespace kernels {
namespace detail {

// One implementation table per backend. The dispatch unit owns the choice;
// the backend units only fill in a table.
struct Vtable {
    void (*adjacency)(const PointCloud& cloud, double r, BitMatrix& out);
    void (*cover_flags)(double px, double py, const double* xs, const double* ys,
                        std::size_t count, const Geometry& geom, double rho,
                        std::uint8_t* out);
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
};

const Vtable& scalar_vtable();

/// Null when this build has no AVX2 variant.
const Vtable* avx2_vtable();

}  // namespace detail
}  // namespace kernels
}  // namespace covtree
