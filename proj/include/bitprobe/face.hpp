#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bitprobe/bitstring.hpp"

namespace bitprobe {

// Subcube of the n-dimensional hypercube: some coordinates carry a fixed bit,
// the rest are free. Masks are kept in integer bit positions (LSB = bit 0) so
// membership is a single mask compare; coordinate-indexed accessors translate.
class Face {
public:
    explicit Face(int width); // the full hypercube

    Face(int width, std::uint32_t fixed_mask, std::uint32_t fixed_values);

    static Face from_fixed(int width, const std::map<int, int>& fixed);

    // "**01": position i is coordinate i, '*' free, '0'/'1' fixed.
    static Face from_pattern(std::string_view pattern);

    int width() const { return width_; }
    int dimension() const;
    std::uint32_t size() const { return 1u << dimension(); }

    std::uint32_t fixed_mask() const { return fixed_mask_; }
    std::uint32_t fixed_values() const { return fixed_values_; }

    bool is_fixed(int coord) const;
    int fixed_value(int coord) const; // Error if the coordinate is free

    bool contains(std::uint32_t vertex) const {
        return (vertex & fixed_mask_) == fixed_values_;
    }

    bool disjoint(const Face& other) const;

    // j-th member vertex in lexicographic (= integer) order, j < size().
    std::uint32_t member(std::uint32_t j) const;
    std::vector<std::uint32_t> members() const;

    // Parallel translation: fixed values are xor-ed by flip_mask, which must
    // stay inside the fixed coordinates.
    Face translated(std::uint32_t flip_mask) const;

    std::map<int, int> fixed_map() const;
    std::string pattern() const;

    friend bool operator==(const Face&, const Face&) = default;

private:
    int width_;
    std::uint32_t fixed_mask_;
    std::uint32_t fixed_values_;
};

} // namespace bitprobe
