#pragma once

#include "wordsim/actions.hpp"
#include "wordsim/episode.hpp"
#include "wordsim/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wordsim {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Generators draw from named substreams of `root` ("map", "rooms", "task",
// "distractors") so changing one parameter group leaves the others' draws intact.
Episode generate_cooking(const Rng& root, Fold fold, const GameParams& params);
Episode generate_twc(const Rng& root, Fold fold, const GameParams& params);
Episode generate_coin(const Rng& root, Fold fold, const GameParams& params);

// Throws GenerationError when params are outside the supported ranges for the game.
void check_params(Game game, const GameParams& params);

struct ScoreState {
    int raw = 0;
    int max_raw = 1;
    bool succeeded = false;
    bool failed = false;

    [[nodiscard]] double normalized() const noexcept { return static_cast<double>(raw) / static_cast<double>(max_raw); }
    friend bool operator==(const ScoreState&, const ScoreState&) = default;
};

ScoreState score_state(const WorldState& state, const Task& task);

// Folds an outcome's reward events and terminal flags into the state. Terminal
// states are frozen: later outcomes are ignored.
ScoreState score_update(WorldState& state, const StepOutcome& outcome, const Task& task);

// execute() followed by score_update().
StepOutcome advance(WorldState& state, const BoundAction& action, const Task& task);

// Command sequence that completes the freshly generated episode.
std::vector<std::string> gold_path(const Episode& episode);

// Shortest exit path between locations, ignoring door state. Empty when from == to.
std::vector<Direction> shortest_path(const WorldState& state, LocationId from, LocationId to);

} // namespace wordsim
