#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitprobe/bitstring.hpp"
#include "bitprobe/face.hpp"

namespace bitprobe {

struct Assignment {
    int coord;
    int value;

    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

struct DatNode;
using NodePtr = std::shared_ptr<const DatNode>;

// Tree node: probe < 0 marks a leaf carrying assignments, otherwise an inner
// node probing one coordinate with a child per observed bit.
struct DatNode {
    int probe = -1;
    NodePtr zero;
    NodePtr one;
    std::vector<Assignment> assignments;

    bool is_leaf() const { return probe < 0; }

    static NodePtr leaf(std::vector<Assignment> assignments);
    static NodePtr inner(int probe, NodePtr zero, NodePtr one);
};

struct LeafInfo {
    int index = 0;      // depth-first position, zero child first
    int depth = 0;
    std::string path;   // route bits from the root, e.g. "01"
    Face face;          // inputs handled by this leaf
    std::vector<Assignment> assignments;
};

struct ExecResult {
    BitString output;
    std::vector<std::pair<int, int>> probes; // (coordinate, observed bit)
    int bits_written = 0;

    int probes_read() const { return static_cast<int>(probes.size()); }
};

struct RawExec {
    std::uint32_t output;
    int reads;
    int writes;
};

struct DisciplineViolation {
    int leaf_index;
    std::string path;
    int coord;

    friend bool operator==(const DisciplineViolation&, const DisciplineViolation&) = default;
};

// Decision assignment tree over width-n codes. Construction validates the
// canonical form: width >= 1, no coordinate probed twice on a path, distinct
// in-range assignment coordinates, and drops assignments that would rewrite a
// probed coordinate with the value the path already guarantees. Immutable
// after construction.
class Dat {
public:
    Dat(int width, NodePtr root);

    int width() const { return width_; }
    const NodePtr& root() const { return root_; }
    int max_depth() const { return max_depth_; }

    const std::vector<LeafInfo>& leaves() const { return leaves_; }
    std::size_t leaf_count() const { return leaves_.size(); }

    ExecResult execute(const BitString& input) const;
    RawExec execute_value(std::uint32_t x) const; // no trace, for enumeration loops

    std::string to_json() const; // canonical form; parse(to_json()) round-trips
    static Dat from_json(std::string_view text);

private:
    int width_;
    NodePtr root_;
    int max_depth_ = 0;
    std::vector<LeafInfo> leaves_;
};

// Equivalent tree with every leaf at the same depth, padded by probing the
// lowest-index unprobed coordinate and duplicating assignments.
Dat balance(const Dat& dat);
Dat balance_to_depth(const Dat& dat, int depth);

Face leaf_face(const Dat& dat, int leaf_index);

// Empty iff every assigned coordinate is probed on its leaf's path.
std::vector<DisciplineViolation> check_write_discipline(const Dat& dat);

// Moves a face by overwriting fixed values; every assigned coordinate must be
// fixed in the face, otherwise the set would not stay a translated face.
Face image_face(const Face& face, const std::vector<Assignment>& assignments);

} // namespace bitprobe
