#include "bitprobe/face.hpp"

#include <bit>

namespace bitprobe {

namespace {

void check_width(int width) {
    if (width < 1 || width > kMaxWidth)
        throw Error("face width must be in [1," + std::to_string(kMaxWidth) + "], got " +
                    std::to_string(width));
}

} // namespace

Face::Face(int width) : width_(width), fixed_mask_(0), fixed_values_(0) {
    check_width(width);
}

Face::Face(int width, std::uint32_t fixed_mask, std::uint32_t fixed_values)
    : width_(width), fixed_mask_(fixed_mask), fixed_values_(fixed_values) {
    check_width(width);
    std::uint32_t all = (width == 32) ? ~0u : ((1u << width) - 1);
    if (fixed_mask & ~all)
        throw Error("fixed mask has bits beyond the face width");
    if (fixed_values & ~fixed_mask)
        throw Error("fixed values outside the fixed mask");
}

Face Face::from_fixed(int width, const std::map<int, int>& fixed) {
    check_width(width);
    std::uint32_t mask = 0, values = 0;
    for (auto [coord, bit] : fixed) {
        if (coord < 0 || coord >= width)
            throw Error("fixed coordinate " + std::to_string(coord) + " out of range");
        if (bit != 0 && bit != 1)
            throw Error("fixed value must be 0 or 1");
        std::uint32_t m = coord_mask(width, coord);
        mask |= m;
        if (bit)
            values |= m;
    }
    return Face(width, mask, values);
}

Face Face::from_pattern(std::string_view pattern) {
    std::map<int, int> fixed;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        if (c == '*')
            continue;
        if (c != '0' && c != '1')
            throw ParseError("invalid face pattern character '" + std::string(1, c) + "'");
        fixed[static_cast<int>(i)] = c - '0';
    }
    return from_fixed(static_cast<int>(pattern.size()), fixed);
}

int Face::dimension() const {
    return width_ - std::popcount(fixed_mask_);
}

bool Face::is_fixed(int coord) const {
    if (coord < 0 || coord >= width_)
        throw Error("coordinate " + std::to_string(coord) + " out of range");
    return (fixed_mask_ & coord_mask(width_, coord)) != 0;
}

int Face::fixed_value(int coord) const {
    if (!is_fixed(coord))
        throw Error("coordinate " + std::to_string(coord) + " is free");
    return (fixed_values_ & coord_mask(width_, coord)) ? 1 : 0;
}

bool Face::disjoint(const Face& other) const {
    if (width_ != other.width_)
        throw WidthMismatchError("faces of widths " + std::to_string(width_) + " and " +
                                 std::to_string(other.width_));
    // They intersect iff the shared fixed coordinates agree everywhere.
    std::uint32_t common = fixed_mask_ & other.fixed_mask_;
    return ((fixed_values_ ^ other.fixed_values_) & common) != 0;
}

std::uint32_t Face::member(std::uint32_t j) const {
    if (j >= size())
        throw Error("member index " + std::to_string(j) + " out of range");
    std::uint32_t x = fixed_values_;
    int bit = dimension() - 1;
    for (int pos = width_ - 1; pos >= 0; --pos) {
        std::uint32_t m = 1u << pos;
        if (fixed_mask_ & m)
            continue;
        if ((j >> bit) & 1u)
            x |= m;
        --bit;
    }
    return x;
}

std::vector<std::uint32_t> Face::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::uint32_t j = 0; j < size(); ++j)
        out.push_back(member(j));
    return out;
}

Face Face::translated(std::uint32_t flip_mask) const {
    if (flip_mask & ~fixed_mask_)
        throw FreeCoordinateWriteError("translation touches a free coordinate of " + pattern());
    return Face(width_, fixed_mask_, fixed_values_ ^ flip_mask);
}

std::map<int, int> Face::fixed_map() const {
    std::map<int, int> out;
    for (int coord = 0; coord < width_; ++coord)
        if (is_fixed(coord))
            out[coord] = fixed_value(coord);
    return out;
}

std::string Face::pattern() const {
    std::string s(static_cast<std::size_t>(width_), '*');
    for (int coord = 0; coord < width_; ++coord)
        if (is_fixed(coord))
            s[static_cast<std::size_t>(coord)] = static_cast<char>('0' + fixed_value(coord));
    return s;
}

} // namespace bitprobe
