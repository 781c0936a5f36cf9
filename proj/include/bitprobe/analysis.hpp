#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bitprobe/counters.hpp"
#include "bitprobe/dat.hpp"
#include "bitprobe/face.hpp"
#include "bitprobe/permutation.hpp"

namespace bitprobe {

// Leaf faces of the balanced tree in depth-first (zero child first) order,
// each paired with its image under the leaf's assignments.
struct FaceDecomposition {
    int width = 0;
    int depth = 0;
    std::vector<Face> source_faces;
    std::vector<Face> image_faces;
    std::vector<std::vector<Assignment>> leaf_assignments;

    std::uint32_t face_size() const { return 1u << (width - depth); }
};

FaceDecomposition face_decomposition(const Dat& dat);

// Same decomposition with faces listed in the given order; `order` must be a
// permutation of the face indices.
FaceDecomposition reorder(const FaceDecomposition& decomp, std::span<const std::size_t> order);

// Before(i*s + j) = j-th vertex of source face i in lexicographic order,
// After likewise over the image faces, s the face size.
std::pair<Permutation, Permutation> before_after(const FaceDecomposition& decomp);

struct AnalysisReport {
    int width = 0;
    int depth = 0;
    std::size_t face_count = 0;
    std::uint64_t inc_inversions = 0;
    std::uint64_t before_inversions = 0;
    std::uint64_t after_inversions = 0;
    Parity inc_parity = Parity::Even;
    Parity before_parity = Parity::Even;
    Parity after_parity = Parity::Even;
};

// Checks Inc(Before(k)) = After(k) pointwise and the parity composition law;
// either failing throws DecompositionMismatchError since both are theorems.
AnalysisReport verify_decomposition(const Dat& dat);
AnalysisReport verify_decomposition(const FaceDecomposition& decomp, const Permutation& inc);

// Pairs u in a, v in b with u > v, both faces enumerated lexicographically.
// Even whenever the faces share at least two free coordinates.
std::uint64_t cross_face_inversions(const Face& a, const Face& b);

enum class Verdict { Consistent, Contradiction };

struct LowerBoundReport {
    Verdict verdict = Verdict::Consistent;
    bool bijective = false;
    bool full_cycle = false;
    int depth = 0;     // balanced depth
    int threshold = 0; // ceil(n/2) - 1, the deepest forbidden depth
    std::optional<AnalysisReport> evidence;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> collision;
};

// Contradiction would require a bijective full-cycle tree at depth <=
// ceil(n/2)-1 together with the parity evidence; on correct input and
// implementation it is unreachable.
LowerBoundReport lower_bound_check(const Dat& dat);

// |{x : execute(x) has bit 1 at coordinate k}|. Requires every leaf face to
// keep at least one free coordinate (max depth <= n-1); the count is then
// even for every width >= 2.
std::uint64_t even_column_count(const Dat& dat, int coord);

enum class WrapVerdict { Wraps, Broken, PreconditionViolated };

struct WraparoundReport {
    WrapVerdict verdict = WrapVerdict::PreconditionViolated;
    std::string detail;
};

// For a tree that leaves two bits unread and increments Enc(v) correctly for
// all v except the maximum, checks that the maximum wraps to Enc(0).
WraparoundReport wraparound_check(const Dat& dat, const CounterCode& code);

struct FalsificationReport {
    int width = 0;
    std::uint64_t dats_enumerated = 0;
    std::uint64_t instances = 0;     // (tree, code) pairs meeting the preconditions
    std::uint64_t wrap_failures = 0; // instances whose maximum failed to wrap

    bool vacuous() const { return instances == 0; }
};

// Exhausts canonical trees of depth <= n-2 and every starting code, recording
// each qualifying partial counter and whether it wraps.
FalsificationReport falsify_wraparound(int n);

} // namespace bitprobe
