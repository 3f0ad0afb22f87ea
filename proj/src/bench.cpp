#include "wordsim/bench.hpp"

#include "wordsim/json_codec.hpp"
#include "wordsim/precrawl.hpp"
#include "wordsim/rng.hpp"
#include "wordsim/variation.hpp"

#include <chrono>
#include <thread>

namespace wordsim {

std::uint64_t nth_seed_in_fold(std::uint64_t from, Fold fold, std::uint64_t n) noexcept
{
    std::uint64_t seed = from;
    while (fold_of_seed(seed) != fold) ++seed;
    if (fold != Fold::Train) return seed + 10 * n;
    // Train owns eight of every ten consecutive seeds.
    for (; n > 0; --n) {
        do {
            ++seed;
        } while (fold_of_seed(seed) != fold);
    }
    return seed;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::duration d)
{
    return std::chrono::duration<double>(d).count();
}

struct Worker {
    std::vector<std::unique_ptr<Session>> sessions;
    std::uint64_t budget = 0;
    std::uint64_t steps = 0;
    std::uint64_t episodes = 0;
    double elapsed = 0;
};

void run_agent(Worker& w, const BenchOptions& options, std::size_t index)
{
    Rng rng(Rng::mix(options.agent_seed ^ Rng::mix(index + 1)));
    std::size_t current = 0;
    Session* s = w.sessions[current].get();
    const StepResult* last = &s->reset();
    int in_episode = 0;
    const auto start = Clock::now();
    while (w.steps < w.budget) {
        if (s->done() || in_episode >= options.episode_steps) {
            current = (current + 1) % w.sessions.size();
            s = w.sessions[current].get();
            last = &s->reset();
            in_episode = 0;
            ++w.episodes;
        }
        const auto pick = static_cast<std::size_t>(rng.below(s->valid_count()));
        if (options.materialize) {
            // The client path: send the action text and receive a full result.
            last = &s->step(last->valid_actions[pick]);
        } else if (!s->step_index(pick)) {
            in_episode = options.episode_steps; // beyond the crawl; restart
            continue;
        }
        ++w.steps;
        ++in_episode;
    }
    w.elapsed = seconds(Clock::now() - start);
}

} // namespace

BenchReport run_bench(const BenchOptions& options)
{
    BenchReport report;
    const int threads = std::max(1, options.threads);
    std::vector<Worker> workers(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers[static_cast<std::size_t>(t)].budget =
            options.steps / static_cast<std::uint64_t>(threads) + (static_cast<std::uint64_t>(t) < options.steps % static_cast<std::uint64_t>(threads) ? 1 : 0);
    }

    const auto setup_start = Clock::now();
    const Fold fold = fold_of_seed(options.base.seed);
    if (options.mode == Mode::Precrawled) {
        auto tree = std::make_shared<const PrecrawledTree>(crawl(options.base, CrawlOptions{options.max_depth}));
        report.tree_nodes = tree->size();
        for (auto& w : workers) w.sessions.push_back(make_precrawled_session(tree));
    } else {
        const int per = std::max(1, options.episodes_per_thread);
        for (int t = 0; t < threads; ++t) {
            for (int e = 0; e < per; ++e) {
                EpisodeConfig c = options.base;
                c.seed = nth_seed_in_fold(options.base.seed, fold, static_cast<std::uint64_t>(e * threads + t));
                c.fold = fold;
                workers[static_cast<std::size_t>(t)].sessions.push_back(make_online_session(c));
            }
        }
    }
    report.setup_seconds = seconds(Clock::now() - setup_start);

    const auto start = Clock::now();
    if (threads == 1) {
        run_agent(workers[0], options, 0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers.size(); ++t) {
            pool.emplace_back([&, t] { run_agent(workers[t], options, t); });
        }
        for (auto& th : pool) th.join();
    }
    report.wall_seconds = seconds(Clock::now() - start);

    for (const auto& w : workers) {
        report.steps += w.steps;
        report.episodes += w.episodes + (w.steps > 0 ? 1 : 0);
        report.per_thread_steps.push_back(w.steps);
        report.per_thread_sps.push_back(w.elapsed > 0 ? static_cast<double>(w.steps) / w.elapsed : 0.0);
    }
    report.sps = report.wall_seconds > 0 ? static_cast<double>(report.steps) / report.wall_seconds : 0.0;
    return report;
}

std::string bench_report_json(const BenchOptions& options, const BenchReport& r)
{
    Json j = Json::object();
    j["config"] = config_to_json(options.base);
    j["mode"] = mode_name(options.mode);
    j["threads"] = options.threads;
    j["materialize"] = options.materialize;
    j["steps"] = r.steps;
    j["episodes"] = r.episodes;
    j["wall_seconds"] = r.wall_seconds;
    j["sps"] = r.sps;
    j["setup_seconds"] = r.setup_seconds;
    j["per_thread_sps"] = r.per_thread_sps;
    j["per_thread_steps"] = r.per_thread_steps;
    if (options.mode == Mode::Precrawled) {
        j["max_depth"] = options.max_depth;
        j["tree_nodes"] = r.tree_nodes;
    }
    return j.dump(2);
}

} // namespace wordsim
