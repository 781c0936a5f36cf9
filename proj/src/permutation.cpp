#include "bitprobe/permutation.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace bitprobe {

std::string to_string(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    if (image_.empty())
        throw Error("empty permutation");
    std::vector<bool> seen(image_.size(), false);
    for (std::uint32_t v : image_) {
        if (v >= image_.size())
            throw Error("image value " + std::to_string(v) + " out of range");
        if (seen[v])
            throw Error("image value " + std::to_string(v) + " repeats; not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    for (std::size_t i = 0; i < n; ++i)
        image[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(image));
}

Permutation from_dat(const Dat& dat) {
    std::size_t n = std::size_t{1} << dat.width();
    std::vector<std::uint32_t> image(n);
    std::vector<std::uint32_t> preimage(n, UINT32_MAX);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t y = dat.execute_value(x).output;
        if (preimage[y] != UINT32_MAX)
            throw NotBijectiveError(preimage[y], x, y);
        preimage[y] = x;
        image[x] = y;
    }
    return Permutation(std::move(image));
}

namespace {

// Counts pairs crossed while merge-sorting a copy.
std::uint64_t merge_count(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& tmp,
                          std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1)
        return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
            tmp[k++] = v[i++];
        } else {
            count += mid - i;
            tmp[k++] = v[j++];
        }
    }
    while (i < mid)
        tmp[k++] = v[i++];
    while (j < hi)
        tmp[k++] = v[j++];
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
              tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return count;
}

} // namespace

std::uint64_t inversion_count(const Permutation& p) {
    std::vector<std::uint32_t> v = p.image();
    std::vector<std::uint32_t> tmp(v.size());
    return merge_count(v, tmp, 0, v.size());
}

Parity parity(const Permutation& p) {
    return inversion_count(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw WidthMismatchError("cannot compose permutations of sizes " +
                                 std::to_string(p.size()) + " and " + std::to_string(q.size()));
    std::vector<std::uint32_t> image(p.size());
    for (std::uint32_t x = 0; x < p.size(); ++x)
        image[x] = p(q(x));
    return Permutation(std::move(image));
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint32_t> image(p.size());
    for (std::uint32_t x = 0; x < p.size(); ++x)
        image[p(x)] = x;
    return Permutation(std::move(image));
}

std::vector<std::vector<std::uint32_t>> cycle_decomposition(const Permutation& p) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<bool> visited(p.size(), false);
    for (std::uint32_t start = 0; start < p.size(); ++start) {
        if (visited[start])
            continue;
        std::vector<std::uint32_t> cycle;
        std::uint32_t x = start;
        do {
            visited[x] = true;
            cycle.push_back(x);
            x = p(x);
        } while (x != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

bool is_full_cycle(const Permutation& p) {
    std::uint32_t x = 0;
    for (std::size_t steps = 1; steps < p.size(); ++steps) {
        x = p(x);
        if (x == 0)
            return false;
    }
    return p(x) == 0;
}

std::string one_line(const Permutation& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.image()[i]);
    }
    s += ']';
    return s;
}

std::string cycle_string(const Permutation& p) {
    std::string s;
    for (const auto& cycle : cycle_decomposition(p)) {
        s += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(cycle[i]);
        }
        s += ')';
    }
    return s;
}

Permutation parse_permutation_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError("permutation must be a JSON array of images");
    std::vector<std::uint32_t> image;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw ParseError("permutation entries must be integers");
        long long x = v.get<long long>();
        if (x < 0)
            throw ParseError("permutation entries must be nonnegative");
        image.push_back(static_cast<std::uint32_t>(x));
    }
    try {
        return Permutation(std::move(image));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

} // namespace bitprobe
