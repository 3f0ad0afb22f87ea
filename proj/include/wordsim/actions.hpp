#pragma once

#include "wordsim/task.hpp"
#include "wordsim/world.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wordsim {

// Template order is the enumeration order of valid actions.
enum class Verb : std::uint8_t {
    LookAround,
    Inventory,
    Examine,
    Move,
    Open,
    Close,
    Take,
    Put,
    Read,
    Cook,
    Chop,
    Slice,
    Dice,
    Eat,
    PrepareMeal,
};
inline constexpr std::size_t kVerbCount = 15;

enum class SlotKind : std::uint8_t { None, Object, Direction };
enum class TemplateScope : std::uint8_t { Generic, CookingWorldOnly };

struct ActionTemplate {
    Verb verb;
    int arity;
    std::array<SlotKind, 2> slots;
    std::string_view surface_pattern; // OBJ / DIR placeholders
    TemplateScope scope;
};

std::span<const ActionTemplate> action_templates() noexcept;
const ActionTemplate& template_for(Verb verb) noexcept;
bool in_scope(Verb verb, Game game) noexcept;

struct BoundAction {
    Verb verb = Verb::LookAround;
    // Object indices, or a Direction value for move.
    std::array<std::uint16_t, 2> args{};
    std::string surface;

    [[nodiscard]] ObjectId object(std::size_t slot) const noexcept { return static_cast<ObjectId>(args[slot]); }
    [[nodiscard]] Direction direction() const noexcept { return static_cast<Direction>(args[0]); }

    friend bool operator==(const BoundAction&, const BoundAction&) = default;
};

// Renders the command string for a template and arguments. Does not check preconditions.
BoundAction bind_action(const WorldState& state, Verb verb, std::uint16_t arg0 = 0, std::uint16_t arg1 = 0);

struct StepOutcome {
    std::string response_text;
    bool state_changed = false;
    bool accepted = false; // preconditions held
    std::vector<RewardEvent> reward_events;
    bool triggered_failure = false;
    bool triggered_success = false;
};

// Exactly the bound actions whose preconditions hold, in template order then
// ascending argument ids. Empty once the episode is terminal.
std::vector<BoundAction> enumerate_valid_actions(const WorldState& state, const Task& task);
void enumerate_valid_actions(const WorldState& state, const Task& task, std::vector<BoundAction>& out);

// Applies the action. Always consumes one step; a failed precondition leaves the
// world otherwise untouched and returns an explanatory response. Reward events and
// success/failure are reported in the outcome; score_update folds them into the state.
StepOutcome execute(WorldState& state, const BoundAction& action, const Task& task);

// Exact match after lowercasing, whitespace collapsing, article removal and the
// in/with preposition equivalence. Returns the index into valid.
std::optional<std::size_t> match_input(std::string_view input, std::span<const BoundAction> valid);

// Normal form used by match_input.
std::string normalize_command(std::string_view text);

// True when the object can currently be seen or reached by the agent.
bool is_visible(const WorldState& state, ObjectId id);

inline constexpr std::string_view kNotFound = "That object was not found.";
inline constexpr std::string_view kGameCompleted = "Game completed.";
inline constexpr std::string_view kGameFailed = "Game over: you have failed the task.";

} // namespace wordsim
