// wordsim command-line front end: play, gen, crawl, bench, serve, validate-tree, map.
#include "wordsim/bench.hpp"
#include "wordsim/games.hpp"
#include "wordsim/json_codec.hpp"
#include "wordsim/mapgen.hpp"
#include "wordsim/precrawl.hpp"
#include "wordsim/protocol.hpp"
#include "wordsim/server.hpp"
#include "wordsim/session.hpp"
#include "wordsim/variation.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <thread>

using namespace wordsim;

namespace {

// Flags that mirror EpisodeConfig field names.
struct ConfigFlags {
    std::string game = "cookingworld";
    std::uint64_t seed = 0;
    std::string fold;
    std::optional<int> num_locations;
    std::optional<int> num_ingredients;
    std::optional<int> num_distractors;
    bool with_doors = false;
    std::string difficulty;

    void attach(CLI::App* app)
    {
        app->add_option("--game", game, "cookingworld | twc | coincollector")->capture_default_str();
        app->add_option("--seed", seed, "episode seed")->capture_default_str();
        app->add_option("--fold", fold, "train | dev | test (must match the seed; implied when omitted)");
        app->add_option("--num-locations", num_locations, "number of rooms");
        app->add_option("--num-ingredients", num_ingredients, "CookingWorld recipe size");
        app->add_option("--num-distractors", num_distractors, "distractor objects");
        app->add_flag("--with-doors", with_doors, "put doors between rooms");
        app->add_option("--difficulty", difficulty, "TWC difficulty: easy | medium | hard");
    }

    // Goes through the same validation as a protocol reset request.
    [[nodiscard]] Json to_json() const
    {
        Json j = Json::object();
        j["game"] = game;
        j["seed"] = seed;
        if (!fold.empty()) j["fold"] = fold;
        if (num_locations) j["num_locations"] = *num_locations;
        if (num_ingredients) j["num_ingredients"] = *num_ingredients;
        if (num_distractors) j["num_distractors"] = *num_distractors;
        if (with_doors) j["with_doors"] = true;
        if (!difficulty.empty()) j["difficulty"] = difficulty;
        return j;
    }

    [[nodiscard]] EpisodeConfig config() const
    {
        EpisodeConfig c = config_from_json(to_json());
        if (c.fold != fold_of_seed(c.seed)) {
            throw ConfigError("seed " + std::to_string(c.seed) + " belongs to fold " + std::string(fold_name(fold_of_seed(c.seed))) +
                              ", not " + std::string(fold_name(c.fold)));
        }
        return c;
    }
};

Mode mode_from(const std::string& text)
{
    const auto m = parse_mode(text);
    if (!m) throw CLI::ValidationError("--mode", "expected online or precrawled");
    return *m;
}

void print_result(const StepResult& r)
{
    std::cout << r.observation << "\n\n";
    std::cout << "Score: " << r.raw_score << "/" << r.max_score << "  Steps: " << r.step_count << "\n";
    if (r.succeeded) std::cout << "*** You won! Game completed. ***\n";
    if (r.failed) std::cout << "*** You lost! Game over. ***\n";
    for (std::size_t i = 0; i < r.valid_actions.size(); ++i) {
        std::cout << "  " << (i + 1) << ". " << r.valid_actions[i] << "\n";
    }
}

int cmd_play(const ConfigFlags& flags, const std::string& mode, int max_depth)
{
    const EpisodeConfig config = flags.config();
    std::unique_ptr<Session> session;
    if (mode_from(mode) == Mode::Online) {
        session = make_online_session(config);
    } else {
        session = make_precrawled_session(std::make_shared<const PrecrawledTree>(crawl(config, CrawlOptions{max_depth})));
    }
    const StepResult* r = &session->reset();
    print_result(*r);
    std::string line;
    while (!r->succeeded && !r->failed) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line == "quit" || line == "exit") break;
        // A bare number picks from the listed actions.
        std::size_t pos = 0;
        try {
            const unsigned long n = std::stoul(line, &pos);
            if (pos == line.size() && n >= 1 && n <= r->valid_actions.size()) line = r->valid_actions[n - 1];
        } catch (const std::exception&) {
        }
        r = &session->step(line);
        print_result(*r);
    }
    return 0;
}

int cmd_gen(const ConfigFlags& flags, bool with_map)
{
    auto episode = std::make_shared<const Episode>(make_episode(flags.config()));
    auto session = make_online_session(episode);
    Json j = Json::object();
    j["config"] = config_to_json(episode->config);
    j["result"] = step_result_to_json(session->reset());
    j["gold_path"] = episode->gold_path;
    if (with_map) j["map"] = layout_ascii(episode->layout);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_crawl(const ConfigFlags& flags, int max_depth, const std::string& out, std::uint64_t cap)
{
    const PrecrawledTree tree = crawl(flags.config(), CrawlOptions{max_depth, cap});
    if (out.empty() || out == "-") {
        save_tree(tree, std::cout);
    } else {
        save_tree(tree, out);
        std::cerr << "wrote " << tree.size() << " nodes (depth " << max_depth << ") to " << out << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& path)
{
    const PrecrawledTree tree = load_tree_file(path);
    Json j = Json::object();
    j["ok"] = true;
    j["config"] = config_to_json(tree.header.config);
    j["maxDepth"] = tree.header.max_depth;
    j["nodeCount"] = tree.size();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_map(const ConfigFlags& flags)
{
    std::cout << layout_ascii(make_episode(flags.config()).layout) << "\n";
    return 0;
}

TcpServer* g_tcp = nullptr;
HttpFrontend* g_http = nullptr;

void on_signal(int)
{
    if (g_tcp) g_tcp->stop();
    if (g_http) g_http->stop();
}

int cmd_serve(const std::string& host, int port, int http_port, const std::vector<std::string>& trees, bool no_crawl, int default_depth)
{
    Dispatcher::Options options;
    options.crawl_on_demand = !no_crawl;
    options.default_max_depth = default_depth;
    Dispatcher dispatcher(options);
    for (const auto& path : trees) {
        dispatcher.add_tree(std::make_shared<const PrecrawledTree>(load_tree_file(path)));
        std::cerr << "loaded tree " << path << "\n";
    }

    TcpServer tcp(dispatcher, host, port);
    g_tcp = &tcp;
    std::unique_ptr<HttpFrontend> http;
    std::thread http_thread;
    if (http_port >= 0) {
        http = std::make_unique<HttpFrontend>(dispatcher);
        const int bound = http->bind(host, http_port);
        if (bound < 0) throw std::runtime_error("cannot bind HTTP port " + std::to_string(http_port));
        g_http = http.get();
        std::cerr << "http listening on " << host << ":" << bound << "\n";
        http_thread = std::thread([&] { http->run(); });
    }
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "tcp listening on " << host << ":" << tcp.port() << "\n";
    tcp.run();
    if (http) {
        http->stop();
        http_thread.join();
    }
    g_tcp = nullptr;
    g_http = nullptr;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wordsim: procedurally generated text-game simulator"};
    app.require_subcommand(1);

    ConfigFlags flags;
    std::string mode = "online";
    int max_depth = 3;
    std::string out;
    std::uint64_t cap = std::uint64_t{1} << 30;
    bool with_map = false;

    auto* play = app.add_subcommand("play", "play an episode in the terminal");
    flags.attach(play);
    play->add_option("--mode", mode, "online | precrawled")->capture_default_str();
    play->add_option("--max-depth", max_depth, "crawl depth for precrawled mode")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "print the config, step-0 result and gold path as JSON");
    flags.attach(gen);
    gen->add_flag("--map", with_map, "include an ASCII map");

    auto* crawl_cmd = app.add_subcommand("crawl", "crawl the action tree and save it as JSON");
    flags.attach(crawl_cmd);
    crawl_cmd->add_option("--max-depth", max_depth, "crawl depth")->capture_default_str();
    crawl_cmd->add_option("--out", out, "output file (default stdout)");
    crawl_cmd->add_option("--size-cap", cap, "estimated size limit in bytes")->capture_default_str();

    BenchOptions bench;
    int episodes = bench.episodes_per_thread;
    auto* bench_cmd = app.add_subcommand("bench", "random-agent throughput benchmark");
    flags.attach(bench_cmd);
    bench_cmd->add_option("--mode", mode, "online | precrawled")->capture_default_str();
    bench_cmd->add_option("--max-depth", bench.max_depth, "crawl depth for precrawled mode")->capture_default_str();
    bench_cmd->add_option("--steps", bench.steps, "total steps over all threads")->capture_default_str();
    bench_cmd->add_option("--threads", bench.threads, "worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
    bench_cmd->add_option("--episodes", episodes, "online episodes per thread")->check(CLI::PositiveNumber)->capture_default_str();
    bench_cmd->add_option("--episode-steps", bench.episode_steps, "agent restarts after this many steps")->check(CLI::PositiveNumber)->capture_default_str();
    bench_cmd->add_option("--agent-seed", bench.agent_seed, "random agent seed")->capture_default_str();
    bench_cmd->add_flag("--materialize", bench.materialize, "step by action text and build full results");

    std::string host = "127.0.0.1";
    int port = 7430;
    int http_port = -1;
    std::vector<std::string> trees;
    bool no_crawl = false;
    auto* serve = app.add_subcommand("serve", "serve the wire protocol over TCP (and optionally HTTP)");
    serve->add_option("--host", host, "bind address")->capture_default_str();
    serve->add_option("--port", port, "TCP port (0 = any)")->capture_default_str();
    serve->add_option("--http-port", http_port, "also serve POST /api over HTTP on this port");
    serve->add_option("--tree", trees, "preload precrawled tree files");
    serve->add_flag("--no-crawl", no_crawl, "reject precrawled resets without a preloaded tree");
    serve->add_option("--max-depth", max_depth, "default crawl depth for on-demand trees")->capture_default_str();

    std::string tree_path;
    auto* validate = app.add_subcommand("validate-tree", "check a saved tree file");
    validate->add_option("path", tree_path, "tree file")->required();

    auto* map = app.add_subcommand("map", "draw the episode layout as ASCII (diagnostic)");
    flags.attach(map);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) return cmd_play(flags, mode, max_depth);
        if (*gen) return cmd_gen(flags, with_map);
        if (*crawl_cmd) return cmd_crawl(flags, max_depth, out, cap);
        if (*bench_cmd) {
            bench.base = flags.config();
            bench.mode = mode_from(mode);
            bench.episodes_per_thread = episodes;
            std::cout << bench_report_json(bench, run_bench(bench)) << "\n";
            return 0;
        }
        if (*serve) return cmd_serve(host, port, http_port, trees, no_crawl, max_depth);
        if (*validate) return cmd_validate(tree_path);
        if (*map) return cmd_map(flags);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const ConfigError& e) {
        std::cerr << "error: invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
