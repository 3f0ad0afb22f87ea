#pragma once

#include "wordsim/fold.hpp"
#include "wordsim/mapgen.hpp"
#include "wordsim/task.hpp"
#include "wordsim/world.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wordsim {

// Difficulty knobs for all three games; each game reads the fields it understands.
struct GameParams {
    int num_locations = 3;
    int num_ingredients = 2;
    int num_distractors = 2;
    bool with_doors = false;
    TwcDifficulty difficulty = TwcDifficulty::Easy;

    static GameParams defaults(Game game) noexcept;
    friend bool operator==(const GameParams&, const GameParams&) = default;
};

struct EpisodeConfig {
    Game game = Game::CookingWorld;
    std::uint64_t seed = 0;
    Fold fold = Fold::Train;
    GameParams params;
    bool generate_gold = true;

    friend bool operator==(const EpisodeConfig&, const EpisodeConfig&) = default;
};

struct Episode {
    EpisodeConfig config;
    MapLayout layout;
    WorldState initial;
    Task task;
    std::vector<std::string> gold_path;
};

} // namespace wordsim
