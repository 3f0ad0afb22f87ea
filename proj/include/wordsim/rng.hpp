#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace wordsim {

// SplitMix64 (Steele, Lea, Flood 2014). The whole stream is defined by integer
// arithmetic on a 64-bit state, so every platform produces the same sequence.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class Rng {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    constexpr explicit Rng(std::uint64_t state = 0) noexcept : state_(state) {}

    constexpr std::uint64_t next() noexcept
    {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform in [0, bound). Rejection sampling keeps it unbiased; bound == 0 returns 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

    // Uniform in [lo, hi] inclusive.
    int between(int lo, int hi) noexcept;

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) noexcept { return below(den) < num; }

    // Index drawn proportionally to integer weights. Returns weights.size() when all are zero.
    std::size_t weighted(std::span<const std::uint32_t> weights) noexcept;

    template <class T>
    void shuffle(std::vector<T>& items) noexcept
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <class T>
    const T& pick(std::span<const T> items) noexcept
    {
        return items[static_cast<std::size_t>(below(items.size()))];
    }

    // Derives an independent generator for a named substream. The parent is not advanced.
    [[nodiscard]] Rng substream(std::string_view tag) const noexcept;

    [[nodiscard]] constexpr std::uint64_t state() const noexcept { return state_; }

    // SplitMix64 finalizer: a bijective avalanche mixer on 64 bits.
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// FNV-1a over bytes; used for stable tags and fold assignment.
constexpr std::uint64_t fnv1a(std::string_view text, std::uint64_t hash = 0xCBF29CE484222325ULL) noexcept
{
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

} // namespace wordsim
