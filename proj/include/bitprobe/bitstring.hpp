#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "bitprobe/errors.hpp"

namespace bitprobe {

// Widest code any exhaustive routine here will enumerate.
inline constexpr int kMaxWidth = 24;

// Bit position (LSB = 0) of coordinate `coord` inside a `width`-bit code.
// Coordinate 0 is the most significant bit, matching written codes where
// the leftmost character is coordinate 0.
constexpr std::uint32_t coord_mask(int width, int coord) {
    return 1u << (width - 1 - coord);
}

constexpr int vertex_bit(int width, std::uint32_t x, int coord) {
    return (x >> (width - 1 - coord)) & 1u;
}

// Fixed-width bit string identified with the integer it denotes in standard
// binary notation.
class BitString {
public:
    BitString(int width, std::uint32_t value);

    // Parses "0101"-style text; character i is coordinate i.
    static BitString parse(std::string_view text);

    int width() const { return width_; }
    std::uint32_t value() const { return value_; }

    int bit(int coord) const;
    BitString with_bit(int coord, int value) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    int width_;
    std::uint32_t value_;
};

} // namespace bitprobe
