#include "bitprobe/analysis.hpp"

#include <algorithm>

#include "bitprobe/search.hpp"

namespace bitprobe {

FaceDecomposition face_decomposition(const Dat& dat) {
    from_dat(dat); // NotBijectiveError before any face is formed
    Dat balanced = balance(dat);
    FaceDecomposition decomp;
    decomp.width = balanced.width();
    decomp.depth = balanced.max_depth();
    for (const LeafInfo& leaf : balanced.leaves()) {
        decomp.source_faces.push_back(leaf.face);
        decomp.image_faces.push_back(image_face(leaf.face, leaf.assignments));
        decomp.leaf_assignments.push_back(leaf.assignments);
    }
    return decomp;
}

FaceDecomposition reorder(const FaceDecomposition& decomp, std::span<const std::size_t> order) {
    std::size_t count = decomp.source_faces.size();
    if (order.size() != count)
        throw Error("face order must list all " + std::to_string(count) + " faces");
    std::vector<bool> seen(count, false);
    FaceDecomposition out;
    out.width = decomp.width;
    out.depth = decomp.depth;
    for (std::size_t i : order) {
        if (i >= count || seen[i])
            throw Error("face order must be a permutation of 0.." + std::to_string(count - 1));
        seen[i] = true;
        out.source_faces.push_back(decomp.source_faces[i]);
        out.image_faces.push_back(decomp.image_faces[i]);
        out.leaf_assignments.push_back(decomp.leaf_assignments[i]);
    }
    return out;
}

std::pair<Permutation, Permutation> before_after(const FaceDecomposition& decomp) {
    std::uint32_t s = decomp.face_size();
    std::size_t n = std::size_t{1} << decomp.width;
    std::vector<std::uint32_t> before(n), after(n);
    for (std::size_t i = 0; i < decomp.source_faces.size(); ++i) {
        for (std::uint32_t j = 0; j < s; ++j) {
            before[i * s + j] = decomp.source_faces[i].member(j);
            after[i * s + j] = decomp.image_faces[i].member(j);
        }
    }
    return {Permutation(std::move(before)), Permutation(std::move(after))};
}

AnalysisReport verify_decomposition(const FaceDecomposition& decomp, const Permutation& inc) {
    auto [before, after] = before_after(decomp);
    for (std::uint32_t k = 0; k < inc.size(); ++k)
        if (inc(before(k)) != after(k))
            throw DecompositionMismatchError(
                "Inc(Before(" + std::to_string(k) + ")) = " + std::to_string(inc(before(k))) +
                " but After(" + std::to_string(k) + ") = " + std::to_string(after(k)));

    AnalysisReport report;
    report.width = decomp.width;
    report.depth = decomp.depth;
    report.face_count = decomp.source_faces.size();
    report.inc_inversions = inversion_count(inc);
    report.before_inversions = inversion_count(before);
    report.after_inversions = inversion_count(after);
    report.inc_parity = report.inc_inversions % 2 ? Parity::Odd : Parity::Even;
    report.before_parity = report.before_inversions % 2 ? Parity::Odd : Parity::Even;
    report.after_parity = report.after_inversions % 2 ? Parity::Odd : Parity::Even;
    if (report.inc_parity != parity_xor(report.before_parity, report.after_parity))
        throw DecompositionMismatchError("parity composition law violated");
    return report;
}

AnalysisReport verify_decomposition(const Dat& dat) {
    return verify_decomposition(face_decomposition(dat), from_dat(dat));
}

std::uint64_t cross_face_inversions(const Face& a, const Face& b) {
    if (!a.disjoint(b))
        throw FaceIntersectionError("faces " + a.pattern() + " and " + b.pattern() +
                                    " intersect");
    std::uint64_t count = 0;
    for (std::uint32_t u : a.members())
        for (std::uint32_t v : b.members())
            if (u > v)
                ++count;
    return count;
}

LowerBoundReport lower_bound_check(const Dat& dat) {
    int n = dat.width();
    LowerBoundReport report;
    report.threshold = (n + 1) / 2 - 1;
    report.depth = dat.max_depth();
    try {
        Permutation inc = from_dat(dat);
        report.bijective = true;
        report.full_cycle = is_full_cycle(inc);
        report.evidence = verify_decomposition(dat);
    } catch (const NotBijectiveError& e) {
        report.bijective = false;
        report.collision = {e.first_input, e.second_input};
    }
    bool forbidden = report.bijective && report.full_cycle && report.depth <= report.threshold;
    report.verdict = forbidden ? Verdict::Contradiction : Verdict::Consistent;
    return report;
}

std::uint64_t even_column_count(const Dat& dat, int coord) {
    if (coord < 0 || coord >= dat.width())
        throw Error("coordinate " + std::to_string(coord) + " out of range");
    if (dat.max_depth() > dat.width() - 1)
        throw PreconditionError("a leaf probes every coordinate; need max depth <= n-1");
    std::uint64_t count = 0;
    std::size_t n = std::size_t{1} << dat.width();
    std::uint32_t m = coord_mask(dat.width(), coord);
    for (std::uint32_t x = 0; x < n; ++x)
        if (dat.execute_value(x).output & m)
            ++count;
    return count;
}

WraparoundReport wraparound_check(const Dat& dat, const CounterCode& code) {
    if (code.width() != dat.width())
        throw WidthMismatchError("code width " + std::to_string(code.width()) +
                                 " != tree width " + std::to_string(dat.width()));
    int n = dat.width();
    if (dat.max_depth() > n - 2)
        return {WrapVerdict::PreconditionViolated,
                "max depth " + std::to_string(dat.max_depth()) + " leaves fewer than two bits unread"};
    std::uint32_t last = static_cast<std::uint32_t>(code.size()) - 1;
    for (std::uint32_t v = 0; v < last; ++v) {
        if (dat.execute_value(code.enc(v)).output != code.enc(v + 1))
            return {WrapVerdict::PreconditionViolated,
                    "Enc(" + std::to_string(v) + ") does not step to Enc(" +
                        std::to_string(v + 1) + ")"};
    }
    std::uint32_t wrapped = dat.execute_value(code.enc(last)).output;
    if (wrapped == code.enc(0))
        return {WrapVerdict::Wraps, "maximum wraps to Enc(0)"};
    return {WrapVerdict::Broken, "maximum maps to code " + std::to_string(wrapped) +
                                     " instead of Enc(0)"};
}

FalsificationReport falsify_wraparound(int n) {
    if (n < 1)
        throw Error("width out of range");
    if (n > 4)
        throw PreconditionError("falsification enumeration is desk-scale only (n <= 4)");
    FalsificationReport report;
    report.width = n;
    if (n < 2)
        return report; // depth bound n-2 < 0: no tree qualifies

    // Any tree of depth <= n-2 whose leaf writes a free coordinate collapses
    // that leaf's image to at most half a face, capping |image| at 2^n - 2;
    // a qualifying counter needs 2^n - 1 distinct successors. Disciplined
    // balanced trees at depth exactly n-2 therefore cover every candidate
    // function.
    std::size_t count = std::size_t{1} << n;
    enumerate_balanced_dats(n, n - 2, [&](const Dat& dat) {
        ++report.dats_enumerated;
        std::vector<std::uint32_t> f(count);
        for (std::uint32_t x = 0; x < count; ++x)
            f[x] = dat.execute_value(x).output;
        for (std::uint32_t start = 0; start < count; ++start) {
            std::uint32_t seen = 0;
            std::uint32_t x = start;
            std::size_t len = 0;
            while (!((seen >> x) & 1u)) {
                seen |= 1u << x;
                ++len;
                x = f[x];
            }
            if (len == count) {
                // The orbit is an Enc table handling every step but the last.
                ++report.instances;
                if (x != start)
                    ++report.wrap_failures;
            }
        }
        return true;
    });
    return report;
}

} // namespace bitprobe
