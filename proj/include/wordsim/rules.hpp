#pragma once

#include "wordsim/actions.hpp"
#include "wordsim/task.hpp"

namespace wordsim {

// What an executed action did, in task-neutral terms.
enum class EffectKind : std::uint8_t { Took, Cut, Cooked, Put, PreparedMeal, Ate };

struct Effect {
    EffectKind kind;
    ObjectId subject = kNoObject;
    ObjectId target = kNoObject;
};

// Game scoring rules: appends newly earned reward events and success/failure flags
// to the outcome. The state is the post-action state; its ledger is not modified.
void apply_task_rules(const Task& task, const WorldState& state, const Effect& effect, StepOutcome& outcome);

} // namespace wordsim
