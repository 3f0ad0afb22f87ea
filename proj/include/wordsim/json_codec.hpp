#pragma once

#include "wordsim/episode.hpp"
#include "wordsim/session.hpp"

#include <nlohmann/json.hpp>

namespace wordsim {

using Json = nlohmann::ordered_json;

Json params_to_json(Game game, const GameParams& params);
Json config_to_json(const EpisodeConfig& config);

// Reads an EpisodeConfig. Params come from a nested "params" object when present,
// otherwise from top-level fields; missing fields take the game's defaults, and a
// missing fold is implied by the seed. Throws ConfigError on bad fields.
EpisodeConfig config_from_json(const Json& j);

Json step_result_to_json(const StepResult& r, bool with_valid_actions = true);
StepResult step_result_from_json(const Json& j);

} // namespace wordsim
