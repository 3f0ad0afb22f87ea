#include "wordsim/precrawl.hpp"

#include "wordsim/actions.hpp"
#include "wordsim/games.hpp"
#include "wordsim/render.hpp"
#include "wordsim/variation.hpp"

#include <cstring>

namespace wordsim {

std::optional<std::uint32_t> PrecrawledTree::position(const Node& n, std::string_view action) const
{
    const auto& positions = lists_[n.valid].positions;
    auto it = positions.find(action);
    if (it == positions.end()) return std::nullopt;
    return it->second;
}

std::uint32_t PrecrawledTree::intern(std::string_view text)
{
    auto it = string_ids_.find(text);
    if (it != string_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(strings_.size());
    const std::string& stored = strings_.emplace_back(text);
    string_ids_.emplace(stored, id);
    return id;
}

std::uint32_t PrecrawledTree::intern_list(const std::vector<std::uint32_t>& items)
{
    std::string key(items.size() * sizeof(std::uint32_t), '\0');
    if (!items.empty()) std::memcpy(key.data(), items.data(), key.size());
    auto it = list_ids_.find(key);
    if (it != list_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(lists_.size());
    ValidList& list = lists_.emplace_back();
    list.items = items;
    list.positions.reserve(items.size());
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        list.positions.emplace(strings_[items[i]], i); // first occurrence wins, as in match_input
    }
    list_ids_.emplace(std::move(key), id);
    return id;
}

std::uint32_t PrecrawledTree::add_node(const Node& n)
{
    nodes_.push_back(n);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t PrecrawledTree::reserve_children(std::uint32_t node_id)
{
    Node& n = nodes_[node_id];
    n.children = static_cast<std::uint32_t>(slots_.size());
    slots_.resize(slots_.size() + lists_[n.valid].items.size(), kNone);
    return n.children;
}

void PrecrawledTree::set_child(std::uint32_t node_id, std::size_t position, std::uint32_t child_id)
{
    slots_[nodes_[node_id].children + position] = child_id;
}

bool operator==(const PrecrawledTree& a, const PrecrawledTree& b)
{
    if (!(a.header.config == b.header.config) || a.header.max_depth != b.header.max_depth ||
        a.header.format_version != b.header.format_version || a.size() != b.size()) {
        return false;
    }
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        const auto& x = a.node(i);
        const auto& y = b.node(i);
        if (a.text(x.obs) != b.text(y.obs) || a.text(x.look) != b.text(y.look) || a.text(x.inventory) != b.text(y.inventory) ||
            x.raw != y.raw || x.max != y.max || x.succeeded != y.succeeded || x.failed != y.failed || x.terminal != y.terminal) {
            return false;
        }
        const auto va = a.valid(x);
        const auto vb = b.valid(y);
        if (va.size() != vb.size()) return false;
        for (std::size_t k = 0; k < va.size(); ++k) {
            if (a.text(va[k]) != b.text(vb[k]) || a.child(x, k) != b.child(y, k)) return false;
        }
    }
    return true;
}

namespace {

std::uint64_t digits(std::uint64_t v) noexcept
{
    std::uint64_t n = 1;
    while (v >= 10) {
        v /= 10;
        ++n;
    }
    return n;
}

// Bytes save_tree spends on one node, give or take escaping.
constexpr std::uint64_t kNodeOverhead = 150;

class Crawler {
public:
    Crawler(const Episode& ep, const CrawlOptions& options, PrecrawledTree* tree)
        : task_(ep.task), options_(options), tree_(tree)
    {
    }

    // Returns false once the size cap is exceeded.
    bool visit(const WorldState& state, std::string_view obs, int depth, std::uint32_t& out_id)
    {
        std::vector<BoundAction> valid;
        enumerate_valid_actions(state, task_, valid);
        look_.clear();
        render_observation(state, look_);
        inv_.clear();
        render_inventory(state, inv_);

        const bool expand = !state.terminal() && depth < options_.max_depth;
        std::uint64_t bytes = kNodeOverhead + obs.size() + look_.size() + inv_.size();
        for (const auto& a : valid) {
            bytes += a.surface.size() + 3;
            if (expand) bytes += a.surface.size() + 4 + digits(nodes_ + valid.size());
        }
        bytes_ += bytes;
        ++nodes_;
        if (bytes_ > options_.size_cap) return false;

        if (tree_) {
            PrecrawledTree::Node node;
            node.obs = tree_->intern(obs);
            node.look = tree_->intern(look_);
            node.inventory = tree_->intern(inv_);
            ids_.clear();
            for (const auto& a : valid) ids_.push_back(tree_->intern(a.surface));
            node.valid = tree_->intern_list(ids_);
            const ScoreState score = score_state(state, task_);
            node.raw = score.raw;
            node.max = score.max_raw;
            node.succeeded = score.succeeded;
            node.failed = score.failed;
            node.terminal = state.terminal();
            out_id = tree_->add_node(node);
            if (expand) tree_->reserve_children(out_id);
        }
        if (!expand) return true;

        const std::uint32_t self = out_id;
        for (std::size_t i = 0; i < valid.size(); ++i) {
            WorldState next = state;
            const StepOutcome outcome = advance(next, valid[i], task_);
            std::uint32_t child = 0;
            if (!visit(next, outcome.response_text, depth + 1, child)) return false;
            if (tree_) tree_->set_child(self, i, child);
        }
        return true;
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::uint64_t bytes() const noexcept { return bytes_; }

private:
    const Task& task_;
    CrawlOptions options_;
    PrecrawledTree* tree_;
    std::uint64_t nodes_ = 0;
    std::uint64_t bytes_ = 0;
    std::string look_;
    std::string inv_;
    std::vector<std::uint32_t> ids_;
};

} // namespace

PrecrawledTree crawl(const Episode& episode, const CrawlOptions& options)
{
    if (options.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
    PrecrawledTree tree;
    tree.header.config = episode.config;
    tree.header.config.generate_gold = true; // not part of the file; keep the default
    tree.header.max_depth = options.max_depth;

    const std::string root_obs = render_observation(episode.initial);
    Crawler crawler(episode, options, &tree);
    std::uint32_t root = 0;
    if (crawler.visit(episode.initial, root_obs, 0, root)) return tree;

    // Over budget: find the deepest bound that would have fit, without building anything.
    const std::uint64_t nodes = crawler.nodes();
    const std::uint64_t bytes = crawler.bytes();
    tree = PrecrawledTree{};
    int fits = -1;
    for (int d = 0; d < options.max_depth; ++d) {
        Crawler probe(episode, CrawlOptions{d, options.size_cap}, nullptr);
        std::uint32_t unused = 0;
        if (!probe.visit(episode.initial, root_obs, 0, unused)) break;
        fits = d;
    }
    throw CrawlLimitError("crawl exceeded the size cap of " + std::to_string(options.size_cap) + " bytes after " +
                              std::to_string(nodes) + " nodes at max_depth " + std::to_string(options.max_depth) +
                              "; deepest depth that fits: " + std::to_string(fits),
                          nodes, bytes, fits);
}

PrecrawledTree crawl(const EpisodeConfig& config, const CrawlOptions& options)
{
    EpisodeConfig c = config;
    c.generate_gold = false;
    Episode ep = make_episode(c);
    ep.config = config;
    return crawl(ep, options);
}

std::uint64_t estimated_size(const PrecrawledTree& tree)
{
    std::uint64_t bytes = 0;
    for (std::uint32_t i = 0; i < tree.size(); ++i) {
        const auto& n = tree.node(i);
        bytes += kNodeOverhead + tree.text(n.obs).size() + tree.text(n.look).size() + tree.text(n.inventory).size();
        const auto valid = tree.valid(n);
        for (std::size_t k = 0; k < valid.size(); ++k) {
            bytes += tree.text(valid[k]).size() + 3;
            if (tree.child(n, k) != PrecrawledTree::kNone) bytes += tree.text(valid[k]).size() + 4 + digits(tree.child(n, k));
        }
    }
    return bytes;
}

std::vector<int> node_depths(const PrecrawledTree& tree)
{
    std::vector<int> depth(tree.size(), -1);
    if (tree.size() == 0) return depth;
    std::vector<std::uint32_t> stack{0};
    depth[0] = 0;
    while (!stack.empty()) {
        const std::uint32_t id = stack.back();
        stack.pop_back();
        const auto& n = tree.node(id);
        for (std::size_t k = 0; k < tree.valid(n).size(); ++k) {
            const std::uint32_t c = tree.child(n, k);
            if (c == PrecrawledTree::kNone || c >= tree.size() || depth[c] != -1) continue;
            depth[c] = depth[id] + 1;
            stack.push_back(c);
        }
    }
    return depth;
}

} // namespace wordsim
