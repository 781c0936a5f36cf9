#include "bitprobe/bitstring.hpp"

namespace bitprobe {

BitString::BitString(int width, std::uint32_t value) : width_(width), value_(value) {
    if (width < 1 || width > kMaxWidth)
        throw Error("width must be in [1," + std::to_string(kMaxWidth) + "], got " +
                    std::to_string(width));
    if (width < 32 && value >> width)
        throw Error("value " + std::to_string(value) + " does not fit in " +
                    std::to_string(width) + " bits");
}

BitString BitString::parse(std::string_view text) {
    if (text.empty())
        throw ParseError("empty bit string");
    std::uint32_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError("invalid bit character '" + std::string(1, c) + "'");
        v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitString(static_cast<int>(text.size()), v);
}

int BitString::bit(int coord) const {
    if (coord < 0 || coord >= width_)
        throw Error("coordinate " + std::to_string(coord) + " out of range");
    return vertex_bit(width_, value_, coord);
}

BitString BitString::with_bit(int coord, int value) const {
    if (coord < 0 || coord >= width_)
        throw Error("coordinate " + std::to_string(coord) + " out of range");
    std::uint32_t m = coord_mask(width_, coord);
    return BitString(width_, value ? (value_ | m) : (value_ & ~m));
}

std::string BitString::str() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
        if (vertex_bit(width_, value_, i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

} // namespace bitprobe
