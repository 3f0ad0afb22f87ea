#pragma once

#include "wordsim/actions.hpp"
#include "wordsim/episode.hpp"
#include "wordsim/precrawl.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordsim {

enum class Mode : std::uint8_t { Online, Precrawled };
std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

struct StepResult {
    std::string observation;
    std::string look;
    std::string inventory;
    int raw_score = 0;
    int max_score = 1;
    bool succeeded = false;
    bool failed = false;
    std::vector<std::string> valid_actions;
    std::uint32_t step_count = 0;

    [[nodiscard]] double normalized_score() const noexcept { return static_cast<double>(raw_score) / max_score; }
    friend bool operator==(const StepResult&, const StepResult&) = default;
};

inline constexpr std::string_view kUnrecognized = "I don't know how to do that. Try one of the valid actions.";
inline constexpr std::string_view kExhausted = "That path lies beyond the precrawled depth.";

class Session {
public:
    virtual ~Session() = default;

    // Step-0 snapshot of a fresh episode; the observation is the opening room description.
    virtual const StepResult& reset() = 0;
    // Text command. Terminal episodes return the frozen terminal result.
    virtual const StepResult& step(std::string_view action) = 0;

    // Throughput path used by the benchmark: advance by valid-action index without
    // materializing a StepResult. Returns false when nothing can be taken (terminal,
    // out of range, or beyond the precrawled depth).
    virtual bool step_index(std::size_t index) = 0;
    [[nodiscard]] virtual std::size_t valid_count() const = 0;
    [[nodiscard]] virtual bool done() const = 0;

    [[nodiscard]] virtual Mode mode() const noexcept = 0;
    [[nodiscard]] virtual const EpisodeConfig& config() const noexcept = 0;
};

// Generates the episode once; reset() restores its initial state.
std::unique_ptr<Session> make_online_session(const EpisodeConfig& config);
std::unique_ptr<Session> make_online_session(std::shared_ptr<const Episode> episode);
std::unique_ptr<Session> make_precrawled_session(std::shared_ptr<const PrecrawledTree> tree);

} // namespace wordsim
