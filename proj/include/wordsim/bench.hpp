#pragma once

#include "wordsim/episode.hpp"
#include "wordsim/session.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wordsim {

struct BenchOptions {
    EpisodeConfig base;          // game, params and first seed; the fold follows from the seed
    Mode mode = Mode::Online;
    std::uint64_t steps = 100'000; // total over all threads
    int threads = 1;
    int episode_steps = 100;     // a random agent restarts after this many steps
    int episodes_per_thread = 16; // online: distinct episodes generated per worker, replayed round robin
    int max_depth = 8;           // precrawled: crawl depth of the shared tree
    std::uint64_t agent_seed = 1;
    bool materialize = false;    // build full StepResults (text actions) instead of index steps
};

struct BenchReport {
    std::uint64_t steps = 0;
    std::uint64_t episodes = 0;
    double wall_seconds = 0;      // stepping phase only
    double sps = 0;               // aggregate: steps / wall_seconds
    double setup_seconds = 0;     // episode generation or crawling, excluded from sps
    std::vector<double> per_thread_sps;
    std::vector<std::uint64_t> per_thread_steps;
    std::uint64_t tree_nodes = 0; // precrawled only
};

// Random agents (uniform over valid actions, seeded per worker) on independent sessions.
BenchReport run_bench(const BenchOptions& options);

std::string bench_report_json(const BenchOptions& options, const BenchReport& report);

// n-th seed (0-based) at or after `from` that belongs to `fold`.
std::uint64_t nth_seed_in_fold(std::uint64_t from, Fold fold, std::uint64_t n) noexcept;

} // namespace wordsim
