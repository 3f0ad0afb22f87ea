#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace wordsim {

enum class Fold : std::uint8_t { Train, Dev, Test };

// Bit set of folds an object or combination may appear in.
using FoldMask = std::uint8_t;
inline constexpr FoldMask kAllFolds = 0b111;
constexpr FoldMask fold_bit(Fold f) noexcept { return static_cast<FoldMask>(1U << static_cast<unsigned>(f)); }

std::string_view fold_name(Fold f) noexcept;
std::optional<Fold> parse_fold(std::string_view text) noexcept;

enum class Game : std::uint8_t { CookingWorld, Twc, CoinCollector };

std::string_view game_name(Game g) noexcept;
// Accepts the canonical names plus "cooking" and "coin".
std::optional<Game> parse_game(std::string_view text) noexcept;

} // namespace wordsim
