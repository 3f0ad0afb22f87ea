#pragma once

#include "wordsim/episode.hpp"

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordsim {

inline constexpr int kTreeFormatVersion = 1;

// Depth-bounded tree of every action path through one episode. Strings and valid-action
// lists are interned, and each node's children are stored as slots aligned with its
// valid-action list, so playback is a hash lookup plus an index.
class PrecrawledTree {
public:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    struct Header {
        EpisodeConfig config;
        int max_depth = 0;
        int format_version = kTreeFormatVersion;
    };

    struct Node {
        std::uint32_t obs = 0;
        std::uint32_t look = 0;
        std::uint32_t inventory = 0;
        std::uint32_t valid = 0;         // valid-list id
        std::uint32_t children = kNone;  // offset into the slot array; kNone when unexpanded
        std::int32_t raw = 0;
        std::int32_t max = 1;
        bool succeeded = false;
        bool failed = false;
        bool terminal = false;
    };

    PrecrawledTree() = default;
    PrecrawledTree(const PrecrawledTree&) = delete;
    PrecrawledTree& operator=(const PrecrawledTree&) = delete;
    PrecrawledTree(PrecrawledTree&&) = default;
    PrecrawledTree& operator=(PrecrawledTree&&) = default;

    Header header;

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] const Node& node(std::uint32_t id) const { return nodes_[id]; }
    [[nodiscard]] std::string_view text(std::uint32_t id) const noexcept { return strings_[id]; }
    [[nodiscard]] std::span<const std::uint32_t> valid(const Node& n) const noexcept { return lists_[n.valid].items; }

    // Child at a valid-list position; kNone when the node was not expanded.
    [[nodiscard]] std::uint32_t child(const Node& n, std::size_t position) const noexcept
    {
        return n.children == kNone ? kNone : slots_[n.children + position];
    }
    // Position of an exact action string in the node's valid list.
    [[nodiscard]] std::optional<std::uint32_t> position(const Node& n, std::string_view action) const;

    // Building.
    std::uint32_t intern(std::string_view text);
    std::uint32_t intern_list(const std::vector<std::uint32_t>& items);
    std::uint32_t add_node(const Node& n);
    // Reserves one slot per valid action (all kNone) and returns the offset.
    std::uint32_t reserve_children(std::uint32_t node_id);
    void set_child(std::uint32_t node_id, std::size_t position, std::uint32_t child_id);

    [[nodiscard]] std::size_t string_count() const noexcept { return strings_.size(); }
    [[nodiscard]] std::size_t list_count() const noexcept { return lists_.size(); }

    // Logical equality: same header and same node contents, independent of interning order.
    friend bool operator==(const PrecrawledTree& a, const PrecrawledTree& b);

private:
    struct ValidList {
        std::vector<std::uint32_t> items;
        std::unordered_map<std::string_view, std::uint32_t> positions;
    };

    std::vector<Node> nodes_;
    std::deque<std::string> strings_; // deque keeps views stable while growing
    std::unordered_map<std::string_view, std::uint32_t> string_ids_;
    std::deque<ValidList> lists_;
    std::unordered_map<std::string, std::uint32_t> list_ids_;
    std::vector<std::uint32_t> slots_;
};

struct CrawlOptions {
    int max_depth = 0;
    // Estimated serialized size limit; crawling stops with CrawlLimitError beyond it.
    std::uint64_t size_cap = std::uint64_t{1} << 30;
};

class CrawlLimitError : public std::runtime_error {
public:
    CrawlLimitError(const std::string& what, std::uint64_t nodes, std::uint64_t bytes, int deepest_complete)
        : std::runtime_error(what), nodes_crawled(nodes), estimated_bytes(bytes), deepest_complete_depth(deepest_complete)
    {
    }
    std::uint64_t nodes_crawled;
    std::uint64_t estimated_bytes;
    int deepest_complete_depth; // largest depth whose whole level was crawled before the cap; -1 if none
};

PrecrawledTree crawl(const EpisodeConfig& config, const CrawlOptions& options);
PrecrawledTree crawl(const Episode& episode, const CrawlOptions& options);

// Serialized-size estimate of a tree as save_tree would write it.
std::uint64_t estimated_size(const PrecrawledTree& tree);

class TreeFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void save_tree(const PrecrawledTree& tree, std::ostream& out);
void save_tree(const PrecrawledTree& tree, const std::string& path);
PrecrawledTree load_tree(std::istream& in);
PrecrawledTree load_tree_file(const std::string& path);
PrecrawledTree load_tree_text(std::string_view json);

// Node depths from the root; all nodes must be reachable.
std::vector<int> node_depths(const PrecrawledTree& tree);

} // namespace wordsim
