#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "covtree/error.hpp"

namespace covtree {

/// SplitMix64 mixing step. Used to scramble user-facing seeds before they
/// reach a generator, so that nearby seeds (base, base+1, ...) produce
/// unrelated streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for an independent named stream derived from a trial seed. Every
/// consumer of randomness owns a stream id, so e.g. the uniform positions of
/// a cloud never shift when a root draw or a probe stream is added.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x51ed2701ULL));
}

namespace seed_stream {
inline constexpr std::uint64_t cloud = 1;  ///< point positions and counts
inline constexpr std::uint64_t root = 2;   ///< random root draws
inline constexpr std::uint64_t probe = 3;  ///< coverage probe positions
}  // namespace seed_stream

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard, and every distribution here is written
/// out explicitly, so results are bit-identical across platforms and standard
/// libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [0, hi). The upper bound is excluded even when
    /// uniform()*hi would round up to hi.
    double uniform_to(double hi) {
        double x = uniform() * hi;
        if (x >= hi) x = std::nextafter(hi, 0.0);
        return x;
    }

    /// Unbiased uniform integer in [0, n), n >= 1, by rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw ParameterError("uniform_index: n must be positive");
        const std::uint64_t bucket = UINT64_MAX / n;
        const std::uint64_t bound = bucket * n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= bound);
        return x / bucket;
    }

    /// Poisson sample by Knuth's multiplication method. Means above 500 are
    /// split into independent chunks (Poisson additivity), which keeps the
    /// running product far away from the subnormal range.
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0.0) || !std::isfinite(mean))
            throw ParameterError("poisson: mean must be finite and nonnegative");
        std::uint64_t count = 0;
        while (mean > 500.0) {
            count += poisson_small(500.0);
            mean -= 500.0;
        }
        if (mean > 0.0) count += poisson_small(mean);
        return count;
    }

  private:
    std::uint64_t poisson_small(double mean) {
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double product = 1.0;
        do {
            ++k;
            product *= uniform();
        } while (product > limit);
        return k - 1;
    }

    std::mt19937_64 gen_;
};

}  // namespace covtree
