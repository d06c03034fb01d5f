#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace covtree {
namespace gf2 {

/// Row index of the highest set bit, or -1 when all words are zero. Column
/// reduction pivots on this row ("lowest" in the matrix picture, where row
/// indices grow downward).
inline std::ptrdiff_t lowest_one(const std::uint64_t* words, std::size_t words_n) {
    for (std::size_t w = words_n; w-- > 0;) {
        if (words[w]) {
            return static_cast<std::ptrdiff_t>(w * 64 + (63 - std::countl_zero(words[w])));
        }
    }
    return -1;
}

inline void set_bit(std::uint64_t* words, std::size_t i) {
    words[i >> 6] |= std::uint64_t(1) << (i & 63);
}

inline bool get_bit(const std::uint64_t* words, std::size_t i) {
    return (words[i >> 6] >> (i & 63)) & 1u;
}

}  // namespace gf2
}  // namespace covtree
