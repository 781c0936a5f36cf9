#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bitprobe/dat.hpp"

namespace bitprobe {

enum class Parity { Even, Odd };

constexpr Parity parity_xor(Parity a, Parity b) {
    return a == b ? Parity::Even : Parity::Odd;
}

std::string to_string(Parity p);

// Bijection of {0..N-1} stored as an image table.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> image);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> image_;
};

// Evaluates the tree on all 2^n inputs; NotBijectiveError reports the first
// colliding input pair.
Permutation from_dat(const Dat& dat);

// |{(i,j) : i < j, p(i) > p(j)}| by merge counting.
std::uint64_t inversion_count(const Permutation& p);
Parity parity(const Permutation& p);

Permutation compose(const Permutation& p, const Permutation& q); // x -> p(q(x))
Permutation inverse(const Permutation& p);

// Each cycle starts at its minimum element; cycles sorted by that minimum.
std::vector<std::vector<std::uint32_t>> cycle_decomposition(const Permutation& p);
bool is_full_cycle(const Permutation& p);

std::string one_line(const Permutation& p);     // "[1,4,3,0]"
std::string cycle_string(const Permutation& p); // "(0 1 4 5)" / "(0)(1 2)"

// Accepts a JSON array of images, e.g. "[1,4,3,0]".
Permutation parse_permutation_json(std::string_view text);

} // namespace bitprobe
