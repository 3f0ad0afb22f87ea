#include "wordsim/json_codec.hpp"

#include "wordsim/variation.hpp"

#include <string>

namespace wordsim {

namespace {

[[noreturn]] void bad_field(std::string_view name, std::string_view expected)
{
    throw ConfigError("field \"" + std::string(name) + "\" must be " + std::string(expected));
}

int int_field(const Json& j, const char* name, int fallback)
{
    auto it = j.find(name);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) bad_field(name, "an integer");
    const auto v = it->get<std::int64_t>();
    if (v < -1'000'000 || v > 1'000'000) bad_field(name, "a small integer");
    return static_cast<int>(v);
}

bool bool_field(const Json& j, const char* name, bool fallback)
{
    auto it = j.find(name);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) bad_field(name, "a boolean");
    return it->get<bool>();
}

std::string string_field(const Json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end() || !it->is_string()) bad_field(name, "a string");
    return it->get<std::string>();
}

} // namespace

Json params_to_json(Game, const GameParams& p)
{
    // Every field is written, including ones the game ignores, so configs round-trip exactly.
    Json j = Json::object();
    j["num_locations"] = p.num_locations;
    j["num_ingredients"] = p.num_ingredients;
    j["num_distractors"] = p.num_distractors;
    j["with_doors"] = p.with_doors;
    j["difficulty"] = difficulty_name(p.difficulty);
    return j;
}

Json config_to_json(const EpisodeConfig& c)
{
    Json j = Json::object();
    j["game"] = game_name(c.game);
    j["seed"] = c.seed;
    j["fold"] = fold_name(c.fold);
    j["params"] = params_to_json(c.game, c.params);
    return j;
}

EpisodeConfig config_from_json(const Json& j)
{
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    EpisodeConfig c;
    const auto game = parse_game(string_field(j, "game"));
    if (!game) throw ConfigError("unknown game \"" + j["game"].get<std::string>() + "\"");
    c.game = *game;

    auto seed = j.find("seed");
    if (seed == j.end() || !(seed->is_number_unsigned() || (seed->is_number_integer() && seed->get<std::int64_t>() >= 0))) {
        bad_field("seed", "a non-negative integer");
    }
    c.seed = seed->get<std::uint64_t>();
    c.fold = fold_of_seed(c.seed);
    if (j.contains("fold")) {
        const auto fold = parse_fold(string_field(j, "fold"));
        if (!fold) throw ConfigError("unknown fold \"" + j["fold"].get<std::string>() + "\"");
        c.fold = *fold;
    }

    const Json& p = j.contains("params") ? j["params"] : j;
    if (!p.is_object()) bad_field("params", "an object");
    const GameParams d = GameParams::defaults(c.game);
    c.params.num_locations = int_field(p, "num_locations", d.num_locations);
    c.params.num_ingredients = int_field(p, "num_ingredients", d.num_ingredients);
    c.params.num_distractors = int_field(p, "num_distractors", d.num_distractors);
    c.params.with_doors = bool_field(p, "with_doors", d.with_doors);
    c.params.difficulty = d.difficulty;
    if (p.contains("difficulty")) {
        const auto diff = parse_difficulty(string_field(p, "difficulty"));
        if (!diff) throw ConfigError("unknown difficulty \"" + p["difficulty"].get<std::string>() + "\"");
        c.params.difficulty = *diff;
    }
    return c;
}

Json step_result_to_json(const StepResult& r, bool with_valid_actions)
{
    Json j = Json::object();
    j["observation"] = r.observation;
    j["look"] = r.look;
    j["inventory"] = r.inventory;
    j["raw_score"] = r.raw_score;
    j["max_score"] = r.max_score;
    j["normalized_score"] = r.normalized_score();
    j["succeeded"] = r.succeeded;
    j["failed"] = r.failed;
    if (with_valid_actions) j["valid_actions"] = r.valid_actions;
    j["step_count"] = r.step_count;
    return j;
}

StepResult step_result_from_json(const Json& j)
{
    StepResult r;
    r.observation = j.at("observation").get<std::string>();
    r.look = j.at("look").get<std::string>();
    r.inventory = j.at("inventory").get<std::string>();
    r.raw_score = j.at("raw_score").get<int>();
    r.max_score = j.at("max_score").get<int>();
    r.succeeded = j.at("succeeded").get<bool>();
    r.failed = j.at("failed").get<bool>();
    if (j.contains("valid_actions")) r.valid_actions = j["valid_actions"].get<std::vector<std::string>>();
    r.step_count = j.at("step_count").get<std::uint32_t>();
    return r;
}

} // namespace wordsim
