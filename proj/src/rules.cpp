#include "wordsim/rules.hpp"

#include <algorithm>

namespace wordsim {

namespace {

class EventSink {
public:
    EventSink(const WorldState& state, StepOutcome& outcome) : state_(state), outcome_(outcome) {}

    void earn(RewardEvent e)
    {
        if (state_.earned(e)) return;
        if (std::find(outcome_.reward_events.begin(), outcome_.reward_events.end(), e) != outcome_.reward_events.end()) return;
        outcome_.reward_events.push_back(e);
    }
    void fail() { outcome_.triggered_failure = true; }
    void succeed() { outcome_.triggered_success = true; }

    [[nodiscard]] std::size_t total_earned() const noexcept { return state_.score_ledger.size() + outcome_.reward_events.size(); }

private:
    const WorldState& state_;
    StepOutcome& outcome_;
};

void cooking_rules(const RecipeTask& recipe, const WorldState& state, const Effect& effect, EventSink& sink)
{
    const RecipeIngredient* ing = recipe.find(effect.subject);
    switch (effect.kind) {
    case EffectKind::Took:
        if (ing) sink.earn(reward(RewardKind::TakeIngredient, effect.subject));
        break;
    case EffectKind::Cut:
        if (!ing) break;
        if (state.object(effect.subject).cut == ing->required.cut) {
            sink.earn(reward(RewardKind::Cut, effect.subject));
        } else {
            sink.fail();
        }
        break;
    case EffectKind::Cooked:
        if (!ing) break;
        if (state.object(effect.subject).cook == ing->required.cook) {
            sink.earn(reward(RewardKind::Cook, effect.subject));
        } else {
            sink.fail();
        }
        break;
    case EffectKind::PreparedMeal:
        sink.earn(reward(RewardKind::PrepareMeal));
        break;
    case EffectKind::Ate:
        if (state.object(effect.subject).has(kMeal)) {
            sink.earn(reward(RewardKind::EatMeal));
            sink.succeed();
        } else if (ing) {
            // A required ingredient is gone; the recipe can no longer be completed.
            sink.fail();
        }
        break;
    case EffectKind::Put:
        break;
    }
}

void twc_rules(const TwcTask& task, const Effect& effect, EventSink& sink)
{
    if (effect.kind != EffectKind::Put) return;
    const TwcTarget* target = task.find(effect.subject);
    if (!target) return;
    if (std::find(target->destinations.begin(), target->destinations.end(), effect.target) == target->destinations.end()) return;
    sink.earn(reward(RewardKind::Placed, effect.subject));
    if (sink.total_earned() == task.targets.size()) sink.succeed();
}

void coin_rules(const CoinTask& task, const Effect& effect, EventSink& sink)
{
    if (effect.kind == EffectKind::Took && effect.subject == task.coin) {
        sink.earn(reward(RewardKind::TakeCoin));
        sink.succeed();
    }
}

} // namespace

void apply_task_rules(const Task& task, const WorldState& state, const Effect& effect, StepOutcome& outcome)
{
    EventSink sink(state, outcome);
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, RecipeTask>) {
                cooking_rules(t, state, effect, sink);
            } else if constexpr (std::is_same_v<T, TwcTask>) {
                twc_rules(t, effect, sink);
            } else {
                coin_rules(t, effect, sink);
            }
        },
        task);
}

const RecipeIngredient* RecipeTask::find(ObjectId id) const noexcept
{
    for (const auto& ing : ingredients) {
        if (ing.object == id) return &ing;
    }
    return nullptr;
}

int RecipeTask::preparation_steps() const noexcept
{
    int total = 0;
    for (const auto& ing : ingredients) total += ing.steps();
    return total;
}

const TwcTarget* TwcTask::find(ObjectId id) const noexcept
{
    for (const auto& t : targets) {
        if (t.object == id) return &t;
    }
    return nullptr;
}

Game game_of(const Task& task) noexcept
{
    switch (task.index()) {
    case 0: return Game::CookingWorld;
    case 1: return Game::Twc;
    default: return Game::CoinCollector;
    }
}

int max_raw_score(const Task& task) noexcept
{
    return std::visit(
        [](const auto& t) -> int {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, RecipeTask>) {
                return static_cast<int>(t.ingredients.size()) + t.preparation_steps() + 2;
            } else if constexpr (std::is_same_v<T, TwcTask>) {
                return static_cast<int>(t.targets.size());
            } else {
                return 1;
            }
        },
        task);
}

std::string_view difficulty_name(TwcDifficulty d) noexcept
{
    switch (d) {
    case TwcDifficulty::Easy: return "easy";
    case TwcDifficulty::Medium: return "medium";
    case TwcDifficulty::Hard: return "hard";
    }
    return "easy";
}

std::optional<TwcDifficulty> parse_difficulty(std::string_view text) noexcept
{
    if (text == "easy") return TwcDifficulty::Easy;
    if (text == "medium") return TwcDifficulty::Medium;
    if (text == "hard") return TwcDifficulty::Hard;
    return std::nullopt;
}

} // namespace wordsim
