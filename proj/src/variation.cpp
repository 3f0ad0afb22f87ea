#include "wordsim/variation.hpp"

#include "wordsim/games.hpp"

#include <string>

namespace wordsim {

std::string_view fold_name(Fold f) noexcept
{
    switch (f) {
    case Fold::Train: return "train";
    case Fold::Dev: return "dev";
    case Fold::Test: return "test";
    }
    return "train";
}

std::optional<Fold> parse_fold(std::string_view text) noexcept
{
    if (text == "train") return Fold::Train;
    if (text == "dev") return Fold::Dev;
    if (text == "test") return Fold::Test;
    return std::nullopt;
}

std::string_view game_name(Game g) noexcept
{
    switch (g) {
    case Game::CookingWorld: return "cookingworld";
    case Game::Twc: return "twc";
    case Game::CoinCollector: return "coincollector";
    }
    return "cookingworld";
}

std::optional<Game> parse_game(std::string_view text) noexcept
{
    if (text == "cookingworld" || text == "cooking") return Game::CookingWorld;
    if (text == "twc") return Game::Twc;
    if (text == "coincollector" || text == "coin") return Game::CoinCollector;
    return std::nullopt;
}

Rng derive_rng(Game game, std::uint64_t seed) noexcept
{
    const std::uint64_t tag = fnv1a(game_name(game));
    return Rng(Rng::mix(Rng::mix(tag) ^ seed));
}

Episode make_episode(const EpisodeConfig& config)
{
    const Fold expected = fold_of_seed(config.seed);
    if (config.fold != expected) {
        throw ConfigError("seed " + std::to_string(config.seed) + " belongs to fold " + std::string(fold_name(expected)) +
                          ", not " + std::string(fold_name(config.fold)));
    }
    const Rng root = derive_rng(config.game, config.seed);
    Episode ep;
    switch (config.game) {
    case Game::CookingWorld: ep = generate_cooking(root, config.fold, config.params); break;
    case Game::Twc: ep = generate_twc(root, config.fold, config.params); break;
    case Game::CoinCollector: ep = generate_coin(root, config.fold, config.params); break;
    }
    ep.config = config;
    if (config.generate_gold) ep.gold_path = gold_path(ep);
    return ep;
}

EpisodeConfig default_config(Game game, std::uint64_t seed)
{
    EpisodeConfig config;
    config.game = game;
    config.seed = seed;
    config.fold = fold_of_seed(seed);
    config.params = GameParams::defaults(game);
    return config;
}

} // namespace wordsim
