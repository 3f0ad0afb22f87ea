#pragma once

#include "wordsim/fold.hpp"
#include "wordsim/library.hpp"
#include "wordsim/world.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wordsim {

struct RecipeIngredient {
    ObjectId object{};
    std::string_view name;
    Preparation required; // Raw means "no requirement"

    [[nodiscard]] int steps() const noexcept
    {
        return (required.cut != CutState::Raw ? 1 : 0) + (required.cook != CookState::Raw ? 1 : 0);
    }
};

struct RecipeTask {
    std::vector<RecipeIngredient> ingredients;
    std::vector<std::string_view> distractors;
    std::string text; // cookbook contents
    ObjectId cookbook = kNoObject;
    ObjectId knife = kNoObject;

    [[nodiscard]] const RecipeIngredient* find(ObjectId id) const noexcept;
    [[nodiscard]] int preparation_steps() const noexcept;
};

enum class TwcDifficulty : std::uint8_t { Easy, Medium, Hard };
std::string_view difficulty_name(TwcDifficulty d) noexcept;
std::optional<TwcDifficulty> parse_difficulty(std::string_view text) noexcept;

struct TwcTarget {
    ObjectId object{};
    std::string_view name;
    std::vector<ObjectId> destinations; // canonical containers present in the world
};

struct TwcTask {
    std::vector<TwcTarget> targets;
    TwcDifficulty difficulty = TwcDifficulty::Easy;

    [[nodiscard]] const TwcTarget* find(ObjectId id) const noexcept;
};

struct CoinTask {
    LocationId coin_location{};
    ObjectId coin = kNoObject;
    int num_distractors = 0;
};

using Task = std::variant<RecipeTask, TwcTask, CoinTask>;

Game game_of(const Task& task) noexcept;
int max_raw_score(const Task& task) noexcept;

enum class RewardKind : std::uint16_t {
    TakeIngredient = 1,
    Cut = 2,
    Cook = 3,
    PrepareMeal = 4,
    EatMeal = 5,
    Placed = 6,
    TakeCoin = 7,
};

constexpr RewardEvent reward(RewardKind kind, ObjectId subject = ObjectId{0}) noexcept
{
    return RewardEvent{(static_cast<std::uint32_t>(kind) << 16) | static_cast<std::uint32_t>(subject)};
}

} // namespace wordsim
