#pragma once

#include <cstdint>

namespace ice {

// Spread the low 32 bits of v so bit i lands at bit 2i.
constexpr std::uint64_t spread_bits(std::uint32_t v) {
    std::uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

// Z-order key with the row in the odd bits, so row-major ties order the
// quadrants top-left, top-right, bottom-left, bottom-right.
constexpr std::uint64_t morton_encode(std::uint32_t row, std::uint32_t col) {
    return (spread_bits(row) << 1) | spread_bits(col);
}

}  // namespace ice
