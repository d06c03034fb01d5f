#include <cstdlib>
#include <string>

#include "covtree/error.hpp"
#include "kernels_common.hpp"

namespace covtree {
namespace kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Active {
    const detail::Vtable* table;
    Backend backend;
};

Active pick() {
    bool usable = cpu_has_avx2() && detail::avx2_vtable() != nullptr;
    if (const char* env = std::getenv("COVTREE_KERNELS")) {
        std::string want(env);
        if (want == "scalar") return {&detail::scalar_vtable(), Backend::scalar};
        if (want == "avx2") {
            if (!usable)
                throw ParameterError("COVTREE_KERNELS=avx2 but AVX2 is unavailable here");
            return {detail::avx2_vtable(), Backend::avx2};
        }
        throw ParameterError("COVTREE_KERNELS must be \"scalar\" or \"avx2\", got \"" +
                             want + "\"");
    }
    if (usable) return {detail::avx2_vtable(), Backend::avx2};
    return {&detail::scalar_vtable(), Backend::scalar};
}

Active& active() {
    static Active a = pick();
    return a;
}

}  // namespace

bool avx2_supported() { return cpu_has_avx2() && detail::avx2_vtable() != nullptr; }

Backend active_backend() { return active().backend; }

void set_backend(Backend b) {
    if (b == Backend::avx2) {
        if (!avx2_supported()) throw ParameterError("AVX2 backend unavailable here");
        active() = {detail::avx2_vtable(), Backend::avx2};
    } else {
        active() = {&detail::scalar_vtable(), Backend::scalar};
    }
}

BitMatrix adjacency(const PointCloud& cloud, double r) {
    if (!(r >= 0.0)) throw ParameterError("radius must be nonnegative");
    BitMatrix out;
    active().table->adjacency(cloud, r, out);
    return out;
}

void cover_flags(double px, double py, const double* xs, const double* ys,
                 std::size_t count, const Geometry& geom, double rho, std::uint8_t* out) {
    active().table->cover_flags(px, py, xs, ys, count, geom, rho, out);
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    active().table->xor_words(dst, src, words);
}

}  // namespace kernels
}  // namespace covtree
