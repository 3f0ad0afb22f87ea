#include "wordsim/json_codec.hpp"
#include "wordsim/precrawl.hpp"
#include "wordsim/variation.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace wordsim {

namespace {

std::string normalized_text(int raw, int max)
{
    return std::to_string(raw) + "/" + std::to_string(max);
}

Json header_json(const PrecrawledTree& tree)
{
    Json h = config_to_json(tree.header.config);
    h["maxDepth"] = tree.header.max_depth;
    h["nodeCount"] = tree.size();
    h["formatVersion"] = tree.header.format_version;
    return h;
}

[[noreturn]] void fail_node(std::size_t index, const std::string& what)
{
    throw TreeFormatError("node " + std::to_string(index) + ": " + what);
}

const Json& member(const Json& obj, const char* key, std::size_t index)
{
    auto it = obj.find(key);
    if (it == obj.end()) fail_node(index, std::string("missing \"") + key + "\"");
    return *it;
}

} // namespace

void save_tree(const PrecrawledTree& tree, std::ostream& out)
{
    out << "{\"header\":" << header_json(tree).dump() << ",\n\"nodes\":[";
    for (std::uint32_t i = 0; i < tree.size(); ++i) {
        const auto& n = tree.node(i);
        Json node = Json::object();
        node["obs"] = tree.text(n.obs);
        node["look"] = tree.text(n.look);
        node["inventory"] = tree.text(n.inventory);
        node["score"] = Json{{"raw", n.raw},
                             {"max", n.max},
                             {"normalized", normalized_text(n.raw, n.max)},
                             {"succeeded", n.succeeded},
                             {"failed", n.failed}};
        Json valid = Json::array();
        Json children = Json::object();
        const auto items = tree.valid(n);
        for (std::size_t k = 0; k < items.size(); ++k) {
            valid.push_back(tree.text(items[k]));
            const std::uint32_t c = tree.child(n, k);
            if (c != PrecrawledTree::kNone) children[std::string(tree.text(items[k]))] = c;
        }
        node["valid"] = std::move(valid);
        node["children"] = std::move(children);
        node["terminal"] = n.terminal;
        out << (i == 0 ? "\n" : ",\n") << node.dump();
    }
    out << "\n]}\n";
}

void save_tree(const PrecrawledTree& tree, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_tree(tree, out);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

PrecrawledTree load_tree_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw TreeFormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("header") || !doc.contains("nodes")) {
        throw TreeFormatError("document must be an object with \"header\" and \"nodes\"");
    }
    const Json& h = doc["header"];
    const Json& nodes = doc["nodes"];
    if (!h.is_object()) throw TreeFormatError("header must be an object");
    if (!nodes.is_array()) throw TreeFormatError("nodes must be an array");

    auto version = h.find("formatVersion");
    if (version == h.end() || !version->is_number_integer()) throw TreeFormatError("header: missing formatVersion");
    if (version->get<int>() != kTreeFormatVersion) {
        throw TreeFormatError("header: unsupported formatVersion " + version->dump() + " (expected " +
                              std::to_string(kTreeFormatVersion) + ")");
    }

    PrecrawledTree tree;
    try {
        tree.header.config = config_from_json(h);
    } catch (const ConfigError& e) {
        throw TreeFormatError(std::string("header: ") + e.what());
    }
    if (tree.header.config.fold != fold_of_seed(tree.header.config.seed)) {
        throw TreeFormatError("header: fold does not match the seed");
    }
    auto depth = h.find("maxDepth");
    if (depth == h.end() || !depth->is_number_integer() || depth->get<std::int64_t>() < 0) {
        throw TreeFormatError("header: maxDepth must be a non-negative integer");
    }
    tree.header.max_depth = depth->get<int>();
    auto count = h.find("nodeCount");
    if (count == h.end() || !count->is_number_unsigned() || count->get<std::uint64_t>() != nodes.size()) {
        throw TreeFormatError("header: nodeCount does not match the number of nodes (" + std::to_string(nodes.size()) + ")");
    }
    if (nodes.empty()) throw TreeFormatError("tree has no root node");

    const std::size_t n = nodes.size();
    std::vector<std::uint32_t> referenced(n, 0);
    std::vector<std::uint32_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
        const Json& node = nodes[i];
        if (!node.is_object()) fail_node(i, "not an object");
        PrecrawledTree::Node out;
        for (const char* key : {"obs", "look", "inventory"}) {
            if (!member(node, key, i).is_string()) fail_node(i, std::string("\"") + key + "\" must be a string");
        }
        out.obs = tree.intern(node["obs"].get_ref<const std::string&>());
        out.look = tree.intern(node["look"].get_ref<const std::string&>());
        out.inventory = tree.intern(node["inventory"].get_ref<const std::string&>());

        const Json& score = member(node, "score", i);
        if (!score.is_object()) fail_node(i, "score must be an object");
        const Json& raw = member(score, "raw", i);
        const Json& max = member(score, "max", i);
        if (!raw.is_number_integer() || !max.is_number_integer()) fail_node(i, "score raw/max must be integers");
        const auto raw_v = raw.get<std::int64_t>();
        const auto max_v = max.get<std::int64_t>();
        if (max_v <= 0 || raw_v < 0 || raw_v > max_v || max_v > 1'000'000) fail_node(i, "score out of range");
        out.raw = static_cast<std::int32_t>(raw_v);
        out.max = static_cast<std::int32_t>(max_v);
        const Json& normalized = member(score, "normalized", i);
        if (!normalized.is_string() || normalized.get<std::string>() != normalized_text(out.raw, out.max)) {
            fail_node(i, "score normalized must be \"" + normalized_text(out.raw, out.max) + "\"");
        }
        const Json& succeeded = member(score, "succeeded", i);
        const Json& failed = member(score, "failed", i);
        const Json& terminal = member(node, "terminal", i);
        if (!succeeded.is_boolean() || !failed.is_boolean() || !terminal.is_boolean()) fail_node(i, "flags must be booleans");
        out.succeeded = succeeded.get<bool>();
        out.failed = failed.get<bool>();
        out.terminal = terminal.get<bool>();
        if (out.succeeded && out.failed) fail_node(i, "both succeeded and failed");
        if (out.terminal != (out.succeeded || out.failed)) fail_node(i, "terminal flag disagrees with the score");
        if (out.succeeded && out.raw != out.max) fail_node(i, "succeeded with a partial score");

        const Json& valid = member(node, "valid", i);
        if (!valid.is_array()) fail_node(i, "valid must be an array");
        ids.clear();
        for (const auto& v : valid) {
            if (!v.is_string()) fail_node(i, "valid actions must be strings");
            ids.push_back(tree.intern(v.get_ref<const std::string&>()));
        }
        if (out.terminal != valid.empty()) fail_node(i, out.terminal ? "terminal node lists valid actions" : "live node has no valid actions");
        out.valid = tree.intern_list(ids);

        const Json& children = member(node, "children", i);
        if (!children.is_object()) fail_node(i, "children must be an object");
        if (out.terminal && !children.empty()) fail_node(i, "terminal node has children");
        const auto id = tree.add_node(out);
        if (children.empty()) continue;
        tree.reserve_children(id);
        for (const auto& [action, child] : children.items()) {
            const auto pos = tree.position(tree.node(id), action);
            if (!pos) fail_node(i, "child key \"" + action + "\" is not a valid action");
            if (!child.is_number_unsigned() || child.get<std::uint64_t>() >= n) {
                fail_node(i, "child index " + child.dump() + " for \"" + action + "\" out of range");
            }
            const auto c = child.get<std::uint32_t>();
            if (c == 0) fail_node(i, "child \"" + action + "\" points at the root");
            if (++referenced[c] > 1) fail_node(c, "referenced by more than one parent");
            tree.set_child(id, *pos, c);
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (referenced[i] == 0) fail_node(i, "not referenced by any parent");
    }
    const auto depths = node_depths(tree);
    for (std::size_t i = 0; i < n; ++i) {
        if (depths[i] < 0) fail_node(i, "unreachable from the root");
        if (depths[i] > tree.header.max_depth) {
            fail_node(i, "depth " + std::to_string(depths[i]) + " exceeds maxDepth " + std::to_string(tree.header.max_depth));
        }
    }
    return tree;
}

PrecrawledTree load_tree(std::istream& in)
{
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_tree_text(text);
}

PrecrawledTree load_tree_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TreeFormatError("cannot open " + path);
    return load_tree(in);
}

} // namespace wordsim
