#include "bitprobe/dat.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace bitprobe {

using ordered_json = nlohmann::ordered_json;

NodePtr DatNode::leaf(std::vector<Assignment> assignments) {
    auto n = std::make_shared<DatNode>();
    n->probe = -1;
    n->assignments = std::move(assignments);
    return n;
}

NodePtr DatNode::inner(int probe, NodePtr zero, NodePtr one) {
    auto n = std::make_shared<DatNode>();
    n->probe = probe;
    n->zero = std::move(zero);
    n->one = std::move(one);
    return n;
}

namespace {

struct Builder {
    int width;
    std::vector<LeafInfo> leaves;
    int max_depth = 0;

    NodePtr canonicalize(const DatNode& node, int depth, std::uint32_t probed_mask,
                         std::uint32_t path_values, std::string& path) {
        if (node.is_leaf()) {
            std::vector<Assignment> kept;
            std::uint32_t seen = 0;
            for (const Assignment& a : node.assignments) {
                if (a.coord < 0 || a.coord >= width)
                    throw Error("assignment coordinate " + std::to_string(a.coord) +
                                " out of range");
                if (a.value != 0 && a.value != 1)
                    throw Error("assignment value must be 0 or 1");
                std::uint32_t m = coord_mask(width, a.coord);
                if (seen & m)
                    throw Error("coordinate " + std::to_string(a.coord) +
                                " assigned twice in one leaf");
                seen |= m;
                // Assigning a probed coordinate the value the path guarantees
                // changes nothing; canonical leaves omit it.
                if ((probed_mask & m) && ((path_values & m) != 0) == (a.value != 0))
                    continue;
                kept.push_back(a);
            }
            std::sort(kept.begin(), kept.end());
            LeafInfo info;
            info.index = static_cast<int>(leaves.size());
            info.depth = depth;
            info.path = path;
            info.face = Face(width, probed_mask, path_values);
            info.assignments = kept;
            leaves.push_back(std::move(info));
            max_depth = std::max(max_depth, depth);
            return DatNode::leaf(std::move(kept));
        }

        if (node.probe < 0 || node.probe >= width)
            throw Error("probe coordinate " + std::to_string(node.probe) + " out of range");
        std::uint32_t m = coord_mask(width, node.probe);
        if (probed_mask & m)
            throw Error("coordinate " + std::to_string(node.probe) +
                        " probed twice on one path");
        if (!node.zero || !node.one)
            throw Error("inner node is missing a child");

        path.push_back('0');
        NodePtr zero = canonicalize(*node.zero, depth + 1, probed_mask | m, path_values, path);
        path.back() = '1';
        NodePtr one = canonicalize(*node.one, depth + 1, probed_mask | m, path_values | m, path);
        path.pop_back();
        return DatNode::inner(node.probe, std::move(zero), std::move(one));
    }
};

} // namespace

Dat::Dat(int width, NodePtr root) : width_(width) {
    if (width < 1 || width > kMaxWidth)
        throw Error("width must be in [1," + std::to_string(kMaxWidth) + "], got " +
                    std::to_string(width));
    if (!root)
        throw Error("null root");
    Builder b{width, {}, 0};
    std::string path;
    root_ = b.canonicalize(*root, 0, 0, 0, path);
    leaves_ = std::move(b.leaves);
    max_depth_ = b.max_depth;
}

ExecResult Dat::execute(const BitString& input) const {
    if (input.width() != width_)
        throw WidthMismatchError("input width " + std::to_string(input.width()) +
                                 " != tree width " + std::to_string(width_));
    const DatNode* node = root_.get();
    std::uint32_t x = input.value();
    std::vector<std::pair<int, int>> probes;
    while (!node->is_leaf()) {
        int bit = vertex_bit(width_, x, node->probe);
        probes.emplace_back(node->probe, bit);
        node = bit ? node->one.get() : node->zero.get();
    }
    std::uint32_t y = x;
    int written = 0;
    for (const Assignment& a : node->assignments) {
        std::uint32_t m = coord_mask(width_, a.coord);
        std::uint32_t next = a.value ? (y | m) : (y & ~m);
        if (next != y)
            ++written;
        y = next;
    }
    return ExecResult{BitString(width_, y), std::move(probes), written};
}

RawExec Dat::execute_value(std::uint32_t x) const {
    const DatNode* node = root_.get();
    int reads = 0;
    while (!node->is_leaf()) {
        node = (x & coord_mask(width_, node->probe)) ? node->one.get() : node->zero.get();
        ++reads;
    }
    std::uint32_t y = x;
    int writes = 0;
    for (const Assignment& a : node->assignments) {
        std::uint32_t m = coord_mask(width_, a.coord);
        std::uint32_t next = a.value ? (y | m) : (y & ~m);
        if (next != y)
            ++writes;
        y = next;
    }
    return RawExec{y, reads, writes};
}

namespace {

ordered_json node_to_json(const DatNode& node) {
    if (node.is_leaf()) {
        ordered_json pairs = ordered_json::array();
        for (const Assignment& a : node.assignments)
            pairs.push_back(ordered_json::array({a.coord, a.value}));
        return ordered_json{{"leaf", std::move(pairs)}};
    }
    ordered_json j;
    j["probe"] = node.probe;
    j["zero"] = node_to_json(*node.zero);
    j["one"] = node_to_json(*node.one);
    return j;
}

NodePtr node_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw ParseError("tree node must be a JSON object");
    if (j.contains("leaf")) {
        const auto& pairs = j.at("leaf");
        if (!pairs.is_array())
            throw ParseError("\"leaf\" must hold an array of [coordinate, value] pairs");
        std::vector<Assignment> assignments;
        for (const auto& p : pairs) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw ParseError("leaf entry must be a [coordinate, value] pair");
            assignments.push_back(Assignment{p[0].get<int>(), p[1].get<int>()});
        }
        return DatNode::leaf(std::move(assignments));
    }
    if (!j.contains("probe") || !j.contains("zero") || !j.contains("one"))
        throw ParseError("inner node needs \"probe\", \"zero\" and \"one\"");
    if (!j.at("probe").is_number_integer())
        throw ParseError("\"probe\" must be an integer");
    return DatNode::inner(j.at("probe").get<int>(), node_from_json(j.at("zero")),
                          node_from_json(j.at("one")));
}

} // namespace

std::string Dat::to_json() const {
    ordered_json j;
    j["bits"] = width_;
    j["root"] = node_to_json(*root_);
    return j.dump(2) + "\n";
}

Dat Dat::from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("bits") || !j.contains("root"))
        throw ParseError("tree file needs \"bits\" and \"root\"");
    if (!j.at("bits").is_number_integer())
        throw ParseError("\"bits\" must be an integer");
    return Dat(j.at("bits").get<int>(), node_from_json(j.at("root")));
}

namespace {

NodePtr pad_to_depth(const DatNode& node, int width, int depth, int target,
                     std::uint32_t probed_mask) {
    if (!node.is_leaf()) {
        std::uint32_t m = coord_mask(width, node.probe);
        return DatNode::inner(node.probe,
                              pad_to_depth(*node.zero, width, depth + 1, target, probed_mask | m),
                              pad_to_depth(*node.one, width, depth + 1, target, probed_mask | m));
    }
    if (depth == target)
        return DatNode::leaf(node.assignments);
    // Probe the lowest-index unprobed coordinate and hand the assignments to
    // both children; the function is unchanged.
    int coord = -1;
    for (int c = 0; c < width; ++c) {
        if (!(probed_mask & coord_mask(width, c))) {
            coord = c;
            break;
        }
    }
    if (coord < 0)
        throw Error("cannot pad a leaf that already probes every coordinate");
    std::uint32_t m = coord_mask(width, coord);
    NodePtr zero = pad_to_depth(node, width, depth + 1, target, probed_mask | m);
    NodePtr one = pad_to_depth(node, width, depth + 1, target, probed_mask | m);
    return DatNode::inner(coord, std::move(zero), std::move(one));
}

} // namespace

Dat balance_to_depth(const Dat& dat, int depth) {
    if (depth < dat.max_depth() || depth > dat.width())
        throw Error("target depth " + std::to_string(depth) + " out of range");
    return Dat(dat.width(), pad_to_depth(*dat.root(), dat.width(), 0, depth, 0));
}

Dat balance(const Dat& dat) {
    return balance_to_depth(dat, dat.max_depth());
}

Face leaf_face(const Dat& dat, int leaf_index) {
    if (leaf_index < 0 || static_cast<std::size_t>(leaf_index) >= dat.leaf_count())
        throw Error("leaf index " + std::to_string(leaf_index) + " out of range");
    return dat.leaves()[static_cast<std::size_t>(leaf_index)].face;
}

std::vector<DisciplineViolation> check_write_discipline(const Dat& dat) {
    std::vector<DisciplineViolation> out;
    for (const LeafInfo& leaf : dat.leaves())
        for (const Assignment& a : leaf.assignments)
            if (!leaf.face.is_fixed(a.coord))
                out.push_back(DisciplineViolation{leaf.index, leaf.path, a.coord});
    return out;
}

Face image_face(const Face& face, const std::vector<Assignment>& assignments) {
    std::uint32_t values = face.fixed_values();
    for (const Assignment& a : assignments) {
        if (a.coord < 0 || a.coord >= face.width())
            throw Error("assignment coordinate " + std::to_string(a.coord) + " out of range");
        if (!face.is_fixed(a.coord))
            throw FreeCoordinateWriteError("assignment writes free coordinate " +
                                           std::to_string(a.coord) + " of face " +
                                           face.pattern());
        std::uint32_t m = coord_mask(face.width(), a.coord);
        values = a.value ? (values | m) : (values & ~m);
    }
    return Face(face.width(), face.fixed_mask(), values);
}

} // namespace bitprobe
