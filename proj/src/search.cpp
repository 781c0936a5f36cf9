#include "bitprobe/search.hpp"

#include <algorithm>
#include <bit>

#include "bitprobe/counters.hpp"

namespace bitprobe {

namespace {

// Perfect-tree enumeration state. Inner nodes live at heap indices
// 1..2^d-1 (children 2i, 2i+1); the path to a node is spelled by the bits
// below its leading one, so leaf heap index 2^d + L carries route L. Slots
// are visited in preorder, which meets leaves in depth-first order.
struct Enumerator {
    int n = 0;
    int d = 0;
    std::uint32_t face_size = 0;
    std::uint32_t half = 0; // 2^(n-1), the column total of any bijection

    bool check_images = false; // image-face disjointness + column feasibility
    bool require_full_cycle = false;
    std::optional<int> max_writes;
    const Permutation* target = nullptr;
    bool root_fixed_to_zero = false;
    std::size_t result_limit = 0;
    std::uint64_t node_budget = 0;

    std::vector<std::pair<std::uint32_t, int>> preorder; // (heap index, depth)
    std::vector<int> probes;                             // by heap index
    std::vector<std::uint32_t> flips;                    // by leaf index
    struct ImageFace {
        std::uint32_t mask;
        std::uint32_t values;
    };
    std::vector<ImageFace> accepted;
    std::vector<std::uint32_t> column; // committed ones per coordinate

    std::function<bool(const Dat&)> on_complete; // false stops the walk
    SearchStats* stats = nullptr;
    std::uint64_t* candidates = nullptr;
    bool stopped = false;

    void build_preorder(std::uint32_t idx, int depth) {
        preorder.emplace_back(idx, depth);
        if (depth < d) {
            build_preorder(idx * 2, depth + 1);
            build_preorder(idx * 2 + 1, depth + 1);
        }
    }

    void run() {
        face_size = 1u << (n - d);
        half = 1u << (n - 1);
        probes.assign(std::size_t{1} << (d + 1), -1);
        flips.assign(std::size_t{1} << d, 0);
        column.assign(static_cast<std::size_t>(n), 0);
        build_preorder(1, 0);
        step(0);
    }

    void path_of(std::uint32_t idx, int depth, std::uint32_t& probed,
                 std::uint32_t& values) const {
        probed = 0;
        values = 0;
        for (int k = 1; k <= depth; ++k) {
            std::uint32_t m = coord_mask(n, probes[idx >> k]);
            probed |= m;
            if ((idx >> (k - 1)) & 1u)
                values |= m;
        }
    }

    void prune(const char* reason) {
        if (stats)
            ++stats->prunes[reason];
    }

    void step(std::size_t slot) {
        if (stopped)
            return;
        if (stats) {
            ++stats->nodes_explored;
            if (node_budget && stats->nodes_explored > node_budget)
                throw ResourceLimitError(stats->nodes_explored,
                                         "slot " + std::to_string(slot) + " of " +
                                             std::to_string(preorder.size()));
        }
        if (slot == preorder.size()) {
            complete();
            return;
        }
        auto [idx, depth] = preorder[slot];
        std::uint32_t probed, values;
        path_of(idx, depth, probed, values);
        if (depth < d) {
            int last = (depth == 0 && root_fixed_to_zero) ? 0 : n - 1;
            for (int coord = 0; coord <= last; ++coord) {
                if (probed & coord_mask(n, coord))
                    continue;
                probes[idx] = coord;
                step(slot + 1);
                if (stopped)
                    return;
            }
            probes[idx] = -1;
            return;
        }

        std::uint32_t leaf = idx - (1u << d);
        if (target) {
            std::uint32_t v0 = values;
            std::uint32_t req = (*target)(v0) ^ v0;
            if (req & ~probed) {
                prune("target_mismatch");
                return;
            }
            std::uint32_t free = ~probed & ((1u << n) - 1);
            // The target must translate the whole face by the same vector.
            for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
                std::uint32_t x = v0 | sub;
                if (((*target)(x) ^ x) != req) {
                    prune("target_mismatch");
                    return;
                }
                if (sub == 0)
                    break;
            }
            try_flip(slot, leaf, probed, values, req);
            return;
        }
        for (std::uint32_t flip = 0;; flip = (flip - probed) & probed) {
            try_flip(slot, leaf, probed, values, flip);
            if (stopped)
                return;
            if (flip == probed)
                break;
        }
    }

    void try_flip(std::size_t slot, std::uint32_t leaf, std::uint32_t probed,
                  std::uint32_t values, std::uint32_t flip) {
        if (max_writes && std::popcount(flip) > *max_writes) {
            prune("write_budget");
            return;
        }
        std::uint32_t out_values = values ^ flip;
        if (check_images) {
            for (const ImageFace& f : accepted) {
                std::uint32_t common = f.mask & probed;
                if (((f.values ^ out_values) & common) == 0) {
                    prune("image_overlap");
                    return;
                }
            }
            // Committed ones per output column; a bijection must hit exactly
            // half in every column.
            std::uint32_t remaining =
                static_cast<std::uint32_t>(flips.size()) - (leaf + 1);
            for (int k = 0; k < n; ++k) {
                std::uint32_t m = coord_mask(n, k);
                std::uint32_t add =
                    (probed & m) ? ((out_values & m) ? face_size : 0) : face_size / 2;
                std::uint32_t committed = column[static_cast<std::size_t>(k)] + add;
                if (committed > half || committed + remaining * face_size < half) {
                    prune("column_infeasible");
                    return;
                }
            }
        }

        flips[leaf] = flip;
        accepted.push_back({probed, values ^ flip});
        for (int k = 0; k < n; ++k) {
            std::uint32_t m = coord_mask(n, k);
            column[static_cast<std::size_t>(k)] +=
                (probed & m) ? (((values ^ flip) & m) ? face_size : 0) : face_size / 2;
        }
        step(slot + 1);
        for (int k = 0; k < n; ++k) {
            std::uint32_t m = coord_mask(n, k);
            column[static_cast<std::size_t>(k)] -=
                (probed & m) ? (((values ^ flip) & m) ? face_size : 0) : face_size / 2;
        }
        accepted.pop_back();
    }

    void complete() {
        if (candidates)
            ++*candidates;
        if (require_full_cycle && !full_cycle_now()) {
            prune("not_full_cycle");
            return;
        }
        if (!on_complete(materialize()))
            stopped = true;
    }

    bool full_cycle_now() const {
        std::size_t count = std::size_t{1} << n;
        std::uint32_t x = 0;
        for (std::size_t steps = 1; steps < count; ++steps) {
            x = apply(x);
            if (x == 0)
                return false;
        }
        return apply(x) == 0;
    }

    std::uint32_t apply(std::uint32_t x) const {
        std::uint32_t idx = 1;
        for (int depth = 0; depth < d; ++depth)
            idx = idx * 2 + ((x & coord_mask(n, probes[idx])) ? 1 : 0);
        return x ^ flips[idx - (1u << d)];
    }

    Dat materialize() const { return Dat(n, build_node(1, 0)); }

    NodePtr build_node(std::uint32_t idx, int depth) const {
        if (depth == d) {
            std::uint32_t probed, values;
            path_of(idx, depth, probed, values);
            std::uint32_t flip = flips[idx - (1u << d)];
            std::vector<Assignment> assignments;
            for (int coord = 0; coord < n; ++coord) {
                std::uint32_t m = coord_mask(n, coord);
                if (flip & m)
                    assignments.push_back({coord, (values & m) ? 0 : 1});
            }
            return DatNode::leaf(std::move(assignments));
        }
        return DatNode::inner(probes[idx], build_node(idx * 2, depth + 1),
                              build_node(idx * 2 + 1, depth + 1));
    }
};

} // namespace

SearchResult run_search(const SearchSpec& spec) {
    if (spec.width < 1 || spec.width > kMaxWidth)
        throw Error("width out of range");
    if (spec.max_depth < 1 || spec.max_depth > spec.width)
        throw Error("depth must be in [1,width]");
    if (spec.target && spec.target->size() != (std::size_t{1} << spec.width))
        throw Error("target permutation size does not match the width");

    SearchResult result;
    int threshold = (spec.width + 1) / 2 - 1;
    if (spec.use_theorem_pruning && spec.require_full_cycle && spec.max_depth <= threshold) {
        // Depths at most ceil(n/2)-1 cannot carry a full-cycle counter; the
        // parity argument rules them out without enumeration.
        result.stats.prunes["theorem_depth_skip"] = 1;
        return result;
    }

    Enumerator e;
    e.n = spec.width;
    e.d = spec.max_depth;
    e.check_images = true;
    e.require_full_cycle = spec.require_full_cycle;
    e.max_writes = spec.max_writes;
    e.target = spec.target ? &*spec.target : nullptr;
    e.root_fixed_to_zero = spec.use_symmetry_reduction && !spec.target;
    e.node_budget = spec.node_budget;
    e.stats = &result.stats;
    e.candidates = &result.candidates_checked;
    e.on_complete = [&](const Dat& dat) {
        result.found.push_back(dat);
        return spec.result_limit == 0 || result.found.size() < spec.result_limit;
    };
    e.run();

    std::sort(result.found.begin(), result.found.end(),
              [](const Dat& a, const Dat& b) { return a.to_json() < b.to_json(); });
    return result;
}

void enumerate_balanced_dats(int width, int depth,
                             const std::function<bool(const Dat&)>& visit) {
    if (width < 1 || width > kMaxWidth)
        throw Error("width out of range");
    if (depth < 0 || depth > width)
        throw Error("depth must be in [0,width]");
    Enumerator e;
    e.n = width;
    e.d = depth;
    e.check_images = false;
    e.on_complete = visit;
    e.run();
}

MinDepthResult min_depth(int n) {
    if (n < 1 || n > 4)
        throw PreconditionError("exhaustive certainty is desk-scale only (n <= 4)");
    MinDepthResult out{0, standard_binary_dat(1), {}};
    for (int d = 1; d <= n; ++d) {
        SearchSpec spec;
        spec.width = n;
        spec.max_depth = d;
        spec.require_full_cycle = true;
        spec.use_theorem_pruning = false;
        spec.result_limit = 1;
        SearchResult r = run_search(spec);
        if (!r.none_exist()) {
            out.depth = d;
            out.witness = r.found.front();
            return out;
        }
        out.nonexistence.emplace_back(d, std::move(r));
    }
    throw Error("no full-cycle tree found up to depth n; enumeration is broken");
}

std::vector<Face> bgps4_leaf_faces() {
    return {
        Face::from_fixed(4, {{0, 0}, {2, 0}, {3, 0}}), // 0000, 0100
        Face::from_fixed(4, {{0, 1}, {2, 0}, {3, 0}}), // 1000, 1100
        Face::from_fixed(4, {{0, 0}, {2, 1}, {3, 0}}), // 0010, 0110
        Face::from_fixed(4, {{0, 1}, {2, 1}, {3, 0}}), // 1010, 1110
        Face::from_fixed(4, {{1, 0}, {2, 0}, {3, 1}}), // 0001, 1001
        Face::from_fixed(4, {{1, 0}, {2, 1}, {3, 1}}), // 0011, 1011
        Face::from_fixed(4, {{0, 0}, {1, 1}, {3, 1}}), // 0101, 0111
        Face::from_fixed(4, {{0, 1}, {1, 1}, {3, 1}}), // 1101, 1111
    };
}

Dat bgps4_dat() {
    SearchSpec spec;
    spec.width = 4;
    spec.max_depth = 3;
    spec.require_full_cycle = true;
    spec.target = bgps4_permutation();
    SearchResult r = run_search(spec);

    auto key = [](const Face& f) { return std::pair{f.fixed_mask(), f.fixed_values()}; };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> want;
    for (const Face& f : bgps4_leaf_faces())
        want.push_back(key(f));
    std::sort(want.begin(), want.end());

    for (const Dat& dat : r.found) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> have;
        for (const LeafInfo& leaf : dat.leaves())
            have.push_back(key(leaf.face));
        std::sort(have.begin(), have.end());
        if (have == want)
            return dat;
    }
    throw Error("no depth-3 tree with the published leaf faces realizes the permutation");
}

} // namespace bitprobe
