#include "wordsim/rng.hpp"

#include <limits>

namespace wordsim {

std::uint64_t Rng::below(std::uint64_t bound) noexcept
{
    if (bound <= 1) {
        return 0;
    }
    // Reject the final partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = next();
    while (draw >= limit) {
        draw = next();
    }
    return draw % bound;
}

int Rng::between(int lo, int hi) noexcept
{
    if (hi <= lo) {
        return lo;
    }
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(below(span));
}

std::size_t Rng::weighted(std::span<const std::uint32_t> weights) noexcept
{
    std::uint64_t total = 0;
    for (auto w : weights) {
        total += w;
    }
    if (total == 0) {
        return weights.size();
    }
    std::uint64_t ticket = below(total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (ticket < weights[i]) {
            return i;
        }
        ticket -= weights[i];
    }
    return weights.size() - 1;
}

Rng Rng::substream(std::string_view tag) const noexcept
{
    return Rng(mix(state_ ^ mix(fnv1a(tag))));
}

} // namespace wordsim
