#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitprobe/dat.hpp"
#include "bitprobe/face.hpp"
#include "bitprobe/permutation.hpp"

namespace bitprobe {

struct SearchSpec {
    int width = 0;
    int max_depth = 0;
    bool require_full_cycle = false;
    std::optional<int> max_writes;
    std::optional<Permutation> target;
    // Skip depths at most ceil(n/2)-1 outright when a full cycle is required.
    bool use_theorem_pruning = false;
    // Fix the root probe to coordinate 0 (sound up to coordinate relabeling);
    // ignored when a target permutation is given.
    bool use_symmetry_reduction = true;
    std::size_t result_limit = 0; // stop exploring after this many hits, 0 = all
    std::uint64_t node_budget = 0; // ResourceLimitError past this, 0 = unlimited
};

struct SearchStats {
    std::uint64_t nodes_explored = 0;
    std::map<std::string, std::uint64_t> prunes;
};

struct SearchResult {
    std::vector<Dat> found; // sorted by canonical JSON text
    std::uint64_t candidates_checked = 0;
    SearchStats stats;

    bool none_exist() const { return found.empty(); }
};

// Exhausts canonical balanced trees of exactly the given depth (padding makes
// this cover every function of smaller read cost). Every returned tree is
// bijective, disciplined, and satisfies the spec's constraints.
SearchResult run_search(const SearchSpec& spec);

struct MinDepthResult {
    int depth = 0;
    Dat witness;
    // Exhaustion certificates for every smaller depth, keyed by depth.
    std::vector<std::pair<int, SearchResult>> nonexistence;
};

// Smallest depth at which a full-cycle counter exists, with one witness.
MinDepthResult min_depth(int n);

// The leaf-face partition of the published 4-bit counter.
std::vector<Face> bgps4_leaf_faces();

// Reconstructs the published 4-bit counter's tree: the first (in canonical
// order) depth-3 tree realizing bgps4_permutation() whose leaf faces are the
// published partition.
Dat bgps4_dat();

// Enumeration backbone shared with the wraparound falsifier: visits every
// canonical balanced tree of the given depth, disciplined leaves only.
// Returns false from the callback to stop early.
void enumerate_balanced_dats(int width, int depth,
                             const std::function<bool(const Dat&)>& visit);

} // namespace bitprobe
