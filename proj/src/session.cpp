#include "wordsim/session.hpp"

#include "wordsim/games.hpp"
#include "wordsim/render.hpp"
#include "wordsim/variation.hpp"

namespace wordsim {

std::string_view mode_name(Mode m) noexcept
{
    return m == Mode::Online ? "online" : "precrawled";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept
{
    if (text == "online") return Mode::Online;
    if (text == "precrawled") return Mode::Precrawled;
    return std::nullopt;
}

namespace {

class OnlineSession final : public Session {
public:
    explicit OnlineSession(std::shared_ptr<const Episode> episode) : episode_(std::move(episode)) { reset(); }

    const StepResult& reset() override
    {
        state_ = episode_->initial;
        enumerate_valid_actions(state_, episode_->task, valid_);
        result_.observation.clear();
        render_observation(state_, result_.observation);
        fill(result_);
        return result_;
    }

    const StepResult& step(std::string_view action) override
    {
        if (state_.terminal()) return result_;
        const auto index = match_input(action, valid_);
        if (!index) {
            ++state_.step_count;
            result_.observation = kUnrecognized;
            result_.step_count = state_.step_count;
            return result_;
        }
        const StepOutcome outcome = advance(state_, valid_[*index], episode_->task);
        enumerate_valid_actions(state_, episode_->task, valid_);
        result_.observation = outcome.response_text;
        fill(result_);
        return result_;
    }

    bool step_index(std::size_t index) override
    {
        if (state_.terminal() || index >= valid_.size()) return false;
        const StepOutcome outcome = advance(state_, valid_[index], episode_->task);
        enumerate_valid_actions(state_, episode_->task, valid_);
        // The observation texts are part of a step's work even when nobody reads them.
        look_.clear();
        render_observation(state_, look_);
        inventory_.clear();
        render_inventory(state_, inventory_);
        last_response_ = outcome.response_text;
        return true;
    }

    [[nodiscard]] std::size_t valid_count() const override { return valid_.size(); }
    [[nodiscard]] bool done() const override { return state_.terminal(); }
    [[nodiscard]] Mode mode() const noexcept override { return Mode::Online; }
    [[nodiscard]] const EpisodeConfig& config() const noexcept override { return episode_->config; }

private:
    void fill(StepResult& r) const
    {
        r.look.clear();
        render_observation(state_, r.look);
        r.inventory.clear();
        render_inventory(state_, r.inventory);
        const ScoreState score = score_state(state_, episode_->task);
        r.raw_score = score.raw;
        r.max_score = score.max_raw;
        r.succeeded = score.succeeded;
        r.failed = score.failed;
        r.valid_actions.clear();
        for (const auto& a : valid_) r.valid_actions.push_back(a.surface);
        r.step_count = state_.step_count;
    }

    std::shared_ptr<const Episode> episode_;
    WorldState state_;
    std::vector<BoundAction> valid_;
    StepResult result_;
    std::string look_;
    std::string inventory_;
    std::string last_response_;
};

class PrecrawledSession final : public Session {
public:
    explicit PrecrawledSession(std::shared_ptr<const PrecrawledTree> tree) : tree_(std::move(tree))
    {
        if (!tree_ || tree_->size() == 0) throw std::invalid_argument("precrawled session needs a non-empty tree");
        reset();
    }

    const StepResult& reset() override
    {
        cursor_ = 0;
        steps_ = 0;
        load(tree_->node(0).obs);
        return result_;
    }

    const StepResult& step(std::string_view action) override
    {
        const auto& node = tree_->node(cursor_);
        if (node.terminal) return result_;
        ++steps_;
        auto pos = tree_->position(node, action);
        if (!pos) pos = normalized_position(node, action);
        if (!pos) {
            result_.observation = kUnrecognized;
            result_.step_count = steps_;
            return result_;
        }
        const std::uint32_t next = tree_->child(node, *pos);
        if (next == PrecrawledTree::kNone) {
            result_.observation = kExhausted;
            result_.step_count = steps_;
            return result_;
        }
        cursor_ = next;
        load(tree_->node(cursor_).obs);
        return result_;
    }

    bool step_index(std::size_t index) override
    {
        const auto& node = tree_->node(cursor_);
        if (node.terminal || index >= tree_->valid(node).size()) return false;
        const std::uint32_t next = tree_->child(node, index);
        if (next == PrecrawledTree::kNone) return false;
        cursor_ = next;
        ++steps_;
        return true;
    }

    [[nodiscard]] std::size_t valid_count() const override { return tree_->valid(tree_->node(cursor_)).size(); }
    [[nodiscard]] bool done() const override
    {
        const auto& node = tree_->node(cursor_);
        return node.terminal || node.children == PrecrawledTree::kNone;
    }
    [[nodiscard]] Mode mode() const noexcept override { return Mode::Precrawled; }
    [[nodiscard]] const EpisodeConfig& config() const noexcept override { return tree_->header.config; }

private:
    // Same leniency as match_input: the first valid action with an equal normal form.
    std::optional<std::uint32_t> normalized_position(const PrecrawledTree::Node& node, std::string_view action) const
    {
        const std::string wanted = normalize_command(action);
        if (wanted.empty()) return std::nullopt;
        const auto valid = tree_->valid(node);
        for (std::uint32_t i = 0; i < valid.size(); ++i) {
            if (normalize_command(tree_->text(valid[i])) == wanted) return i;
        }
        return std::nullopt;
    }

    void load(std::uint32_t obs)
    {
        const auto& node = tree_->node(cursor_);
        result_.observation = tree_->text(obs);
        result_.look = tree_->text(node.look);
        result_.inventory = tree_->text(node.inventory);
        result_.raw_score = node.raw;
        result_.max_score = node.max;
        result_.succeeded = node.succeeded;
        result_.failed = node.failed;
        result_.valid_actions.clear();
        for (std::uint32_t id : tree_->valid(node)) result_.valid_actions.emplace_back(tree_->text(id));
        result_.step_count = steps_;
    }

    std::shared_ptr<const PrecrawledTree> tree_;
    std::uint32_t cursor_ = 0;
    std::uint32_t steps_ = 0;
    StepResult result_;
};

} // namespace

std::unique_ptr<Session> make_online_session(std::shared_ptr<const Episode> episode)
{
    return std::make_unique<OnlineSession>(std::move(episode));
}

std::unique_ptr<Session> make_online_session(const EpisodeConfig& config)
{
    EpisodeConfig c = config;
    c.generate_gold = false;
    auto ep = std::make_shared<Episode>(make_episode(c));
    ep->config = config;
    return make_online_session(std::shared_ptr<const Episode>(std::move(ep)));
}

std::unique_ptr<Session> make_precrawled_session(std::shared_ptr<const PrecrawledTree> tree)
{
    return std::make_unique<PrecrawledSession>(std::move(tree));
}

} // namespace wordsim
