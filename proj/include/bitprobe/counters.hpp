#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "bitprobe/bitstring.hpp"
#include "bitprobe/dat.hpp"
#include "bitprobe/permutation.hpp"

namespace bitprobe {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r); // "p/q", denominator always printed

// Bijective encoding of {0..2^n-1} onto n-bit codes with its inverse table.
class CounterCode {
public:
    CounterCode(int width, std::vector<std::uint32_t> enc);

    int width() const { return width_; }
    std::size_t size() const { return enc_.size(); }

    std::uint32_t enc(std::uint32_t value) const;
    std::uint32_t dec(std::uint32_t code) const;

private:
    int width_;
    std::vector<std::uint32_t> enc_;
    std::vector<std::uint32_t> dec_;
};

struct ProbeStats {
    int worst_reads = 0;
    int worst_writes = 0;
    Rational avg_reads{0};
    Rational avg_writes{0};
};

// Probes from the least significant coordinate upward until a 0 is found and
// flips the probed suffix: +1 mod 2^n on the standard binary code.
Dat standard_binary_dat(int n);

// Binary reflected Gray code increment: a full-depth tree whose every leaf
// flips exactly one bit.
Dat gray_code_dat(int n);

// The published 4-bit counter of Brodal, Greve, Pandey and Satti that reads
// 3 bits in the worst case, as the permutation its increment induces.
Permutation bgps4_permutation();

// Exact read/write statistics over all 2^n inputs.
ProbeStats probe_stats(const Dat& dat);

// Enc(0) = zero_code, Enc(v+1) = Inc(Enc(v)); requires a full-cycle tree.
CounterCode decode_table(const Dat& dat, const BitString& zero_code);

} // namespace bitprobe
