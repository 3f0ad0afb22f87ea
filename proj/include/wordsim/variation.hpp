#pragma once

#include "wordsim/episode.hpp"
#include "wordsim/rng.hpp"

#include <cstdint>
#include <stdexcept>

namespace wordsim {

// Seed blocks: last decimal digit 0-7 train, 8 dev, 9 test.
constexpr Fold fold_of_seed(std::uint64_t seed) noexcept
{
    const auto digit = seed % 10;
    if (digit < 8) return Fold::Train;
    return digit == 8 ? Fold::Dev : Fold::Test;
}

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Root generator for an episode, a pure function of (game, seed).
Rng derive_rng(Game game, std::uint64_t seed) noexcept;

// Validates the config (fold must match the seed block) and generates the episode.
Episode make_episode(const EpisodeConfig& config);

// Convenience: the config with the fold implied by the seed and default params.
EpisodeConfig default_config(Game game, std::uint64_t seed);

} // namespace wordsim
