#include "bitprobe/counters.hpp"

#include <bit>

namespace bitprobe {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

CounterCode::CounterCode(int width, std::vector<std::uint32_t> enc)
    : width_(width), enc_(std::move(enc)) {
    if (width < 1 || width > kMaxWidth)
        throw Error("counter width out of range");
    std::size_t n = std::size_t{1} << width;
    if (enc_.size() != n)
        throw Error("encoding table must have 2^width entries");
    dec_.assign(n, UINT32_MAX);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t code = enc_[v];
        if (code >= n)
            throw Error("code " + std::to_string(code) + " out of range");
        if (dec_[code] != UINT32_MAX)
            throw Error("code " + std::to_string(code) + " encodes two values");
        dec_[code] = v;
    }
}

std::uint32_t CounterCode::enc(std::uint32_t value) const {
    if (value >= enc_.size())
        throw Error("value " + std::to_string(value) + " out of range");
    return enc_[value];
}

std::uint32_t CounterCode::dec(std::uint32_t code) const {
    if (code >= dec_.size())
        throw Error("code " + std::to_string(code) + " out of range");
    return dec_[code];
}

Dat standard_binary_dat(int n) {
    if (n < 1 || n > kMaxWidth)
        throw Error("width out of range");
    // All-ones input: every bit clears.
    std::vector<Assignment> all_zero;
    for (int j = 0; j < n; ++j)
        all_zero.push_back({j, 0});
    NodePtr node = DatNode::leaf(std::move(all_zero));
    // Wrap from coordinate 0 outward so the root ends up probing the least
    // significant coordinate n-1.
    for (int c = 0; c < n; ++c) {
        // Probing coordinate c found 0 after trailing ones: flip the suffix.
        std::vector<Assignment> flip;
        flip.push_back({c, 1});
        for (int j = c + 1; j < n; ++j)
            flip.push_back({j, 0});
        node = DatNode::inner(c, DatNode::leaf(std::move(flip)), std::move(node));
    }
    return Dat(n, std::move(node));
}

namespace {

// Coordinate the reflected Gray increment flips for code g: flip the last bit
// when the popcount is even, otherwise the bit left of the least significant
// one (the most significant bit when g is its own least significant one).
int gray_flip_coord(int n, std::uint32_t g) {
    if (std::popcount(g) % 2 == 0)
        return n - 1;
    int pos = std::countr_zero(g); // integer bit position of the lowest set bit
    int coord = n - 1 - pos;
    return coord == 0 ? 0 : coord - 1;
}

NodePtr gray_subtree(int n, int next_coord, std::uint32_t path_values) {
    if (next_coord == n) {
        std::uint32_t g = path_values;
        int flip = gray_flip_coord(n, g);
        int value = vertex_bit(n, g, flip) ^ 1;
        return DatNode::leaf({Assignment{flip, value}});
    }
    std::uint32_t m = coord_mask(n, next_coord);
    return DatNode::inner(next_coord, gray_subtree(n, next_coord + 1, path_values),
                          gray_subtree(n, next_coord + 1, path_values | m));
}

} // namespace

Dat gray_code_dat(int n) {
    if (n < 1 || n > kMaxWidth)
        throw Error("width out of range");
    return Dat(n, gray_subtree(n, 0, 0));
}

Permutation bgps4_permutation() {
    return Permutation({1, 4, 3, 0, 5, 13, 7, 15, 10, 12, 2, 8, 14, 9, 6, 11});
}

ProbeStats probe_stats(const Dat& dat) {
    std::size_t n = std::size_t{1} << dat.width();
    long long total_reads = 0, total_writes = 0;
    int worst_reads = 0, worst_writes = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
        RawExec r = dat.execute_value(x);
        total_reads += r.reads;
        total_writes += r.writes;
        worst_reads = std::max(worst_reads, r.reads);
        worst_writes = std::max(worst_writes, r.writes);
    }
    return ProbeStats{worst_reads, worst_writes,
                      Rational(total_reads, static_cast<long long>(n)),
                      Rational(total_writes, static_cast<long long>(n))};
}

CounterCode decode_table(const Dat& dat, const BitString& zero_code) {
    if (zero_code.width() != dat.width())
        throw WidthMismatchError("zero code width " + std::to_string(zero_code.width()) +
                                 " != tree width " + std::to_string(dat.width()));
    Permutation inc = from_dat(dat);
    if (!is_full_cycle(inc))
        throw NotFullCycleError("increment is not a full cycle; Enc would not be total");
    std::vector<std::uint32_t> enc(inc.size());
    enc[0] = zero_code.value();
    for (std::uint32_t v = 1; v < inc.size(); ++v)
        enc[v] = inc(enc[v - 1]);
    return CounterCode(dat.width(), std::move(enc));
}

} // namespace bitprobe
