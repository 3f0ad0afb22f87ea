// Acceptance suite: one PASS/FAIL line per criterion.
//
//   wordsim_acceptance [criterion ...]    (no arguments: run all)
//
// Exit status is nonzero when any selected criterion fails.
#include "../support.hpp"

#include "wordsim/bench.hpp"
#include "wordsim/json_codec.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

using namespace wordsim;
using namespace wordsim::testing;

namespace {

constexpr Game kGames[] = {Game::CookingWorld, Game::Twc, Game::CoinCollector};
constexpr Fold kFolds[] = {Fold::Train, Fold::Dev, Fold::Test};

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        pass = false;
        detail << "  FAILED: " << why << "\n";
    }
    void note(const std::string& what) { detail << "  " << what << "\n"; }
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string sps_text(double sps)
{
    if (sps >= 1e6) return fmt("%.2fM", sps / 1e6);
    return fmt("%.0fk", sps / 1e3);
}

BenchReport bench(Game g, Mode mode, std::uint64_t steps, int threads, bool materialize, int max_depth = 8)
{
    BenchOptions o;
    o.base = default_config(g, 0);
    o.mode = mode;
    o.steps = steps;
    o.threads = threads;
    o.materialize = materialize;
    o.max_depth = max_depth;
    return run_bench(o);
}

// --- throughput ---------------------------------------------------------------

void throughput_online(Verdict& v)
{
    const std::pair<Game, double> gates[] = {{Game::CoinCollector, 100'000}, {Game::CookingWorld, 60'000}};
    for (const auto& [g, gate] : gates) {
        const BenchReport idx = bench(g, Mode::Online, 1'000'000, 1, false);
        const BenchReport full = bench(g, Mode::Online, 1'000'000, 1, true);
        v.note(std::string(game_name(g)) + ": index " + sps_text(idx.sps) + " sps, materialized " + sps_text(full.sps) +
               " sps (gate " + sps_text(gate) + " on the materialized path; setup " + fmt("%.3f", full.setup_seconds) +
               " s excluded)");
        if (full.sps < gate) v.fail(std::string(game_name(g)) + " below gate");
    }
}

void throughput_precrawled(Verdict& v)
{
    // Coin Collector easy is the only game whose depth-8 tree fits; the others use depth 3.
    const std::pair<Game, int> runs[] = {{Game::CoinCollector, 8}, {Game::Twc, 3}, {Game::CookingWorld, 3}};
    for (const auto& [g, depth] : runs) {
        const BenchReport idx = bench(g, Mode::Precrawled, 5'000'000, 1, false, depth);
        const BenchReport full = bench(g, Mode::Precrawled, 2'000'000, 1, true, depth);
        v.note(std::string(game_name(g)) + " depth " + std::to_string(depth) + " (" + std::to_string(full.tree_nodes) +
               " nodes): index " + sps_text(idx.sps) + " sps, materialized " + sps_text(full.sps) + " sps");
        if (full.sps < 1e6) v.fail(std::string(game_name(g)) + " materialized playback below 1M sps");
    }
}

void precrawled_scaling(Verdict& v)
{
    const unsigned cores = std::thread::hardware_concurrency();
    v.note("hardware threads: " + std::to_string(cores));
    const double base = bench(Game::CoinCollector, Mode::Precrawled, 4'000'000, 1, true).sps;
    v.note("1 worker: " + sps_text(base) + " sps");
    for (int t : {2, 4, 8}) {
        const double sps = bench(Game::CoinCollector, Mode::Precrawled, 4'000'000ULL * static_cast<unsigned>(t), t, true).sps;
        const double eff = sps / (base * t);
        v.note(std::to_string(t) + " workers: " + sps_text(sps) + " sps, efficiency " + fmt("%.2f", eff));
        if (eff < 0.6) {
            v.fail(std::to_string(t) + " workers reach " + fmt("%.2f", eff) + "x linear (< 0.6)" +
                   (static_cast<unsigned>(t) > cores ? "; more workers than hardware threads" : ""));
        }
    }
}

// --- online == precrawled --------------------------------------------------------

// Walks every path of the tree, replaying each from a fresh online reset.
bool compare_exhaustive(const EpisodeConfig& c, const PrecrawledTree& tree, std::string& why)
{
    auto online = make_online_session(c);
    std::vector<std::string> path;
    std::size_t checked = 0;
    std::function<bool(std::uint32_t)> visit = [&](std::uint32_t index) -> bool {
        const auto& node = tree.node(index);
        const StepResult* r = &online->reset();
        for (const auto& a : path) r = &online->step(a);
        ++checked;
        std::vector<std::string> tree_valid;
        for (std::uint32_t id : tree.valid(node)) tree_valid.emplace_back(tree.text(id));
        if (r->observation != tree.text(node.obs) || r->look != tree.text(node.look) ||
            r->inventory != tree.text(node.inventory) || r->raw_score != node.raw || r->max_score != node.max ||
            r->succeeded != node.succeeded || r->failed != node.failed || r->valid_actions != tree_valid) {
            why = "mismatch after [" + (path.empty() ? std::string() : path.back()) + "] at depth " + std::to_string(path.size());
            return false;
        }
        for (std::size_t i = 0; i < tree_valid.size(); ++i) {
            const std::uint32_t child = tree.child(node, i);
            if (child == PrecrawledTree::kNone) continue;
            path.push_back(tree_valid[i]);
            if (!visit(child)) return false;
            path.pop_back();
        }
        return true;
    };
    const bool ok = visit(0);
    if (ok && checked != tree.size()) {
        why = "visited " + std::to_string(checked) + " of " + std::to_string(tree.size()) + " nodes";
        return false;
    }
    return ok;
}

void equivalence_depth4(Verdict& v)
{
    for (Game g : kGames) {
        std::uint64_t nodes = 0;
        int episodes = 0;
        for (std::uint64_t n = 0; n < 20; ++n) {
            const EpisodeConfig c = default_config(g, nth_seed_in_fold(0, Fold::Train, n * 7));
            const PrecrawledTree tree = crawl(c, CrawlOptions{4});
            nodes += tree.size();
            std::string why;
            if (!compare_exhaustive(c, tree, why)) {
                v.fail(std::string(game_name(g)) + " seed " + std::to_string(c.seed) + ": " + why);
                break;
            }
            ++episodes;
        }
        v.note(std::string(game_name(g)) + ": " + std::to_string(episodes) + " episodes, " + std::to_string(nodes) +
               " paths compared exhaustively");
    }
}

void equivalence_depth8(Verdict& v)
{
    for (Game g : kGames) {
        const EpisodeConfig first = default_config(g, 0);
        try {
            constexpr int kEpisodes = 10;
            constexpr int kPathsPerEpisode = 1000;
            for (std::uint64_t n = 0; n < kEpisodes; ++n) {
                const EpisodeConfig c = default_config(g, nth_seed_in_fold(0, Fold::Train, n));
                auto tree = std::make_shared<const PrecrawledTree>(crawl(c, CrawlOptions{8}));
                auto online = make_online_session(c);
                auto pre = make_precrawled_session(tree);
                Rng rng(n + 1);
                for (int p = 0; p < kPathsPerEpisode; ++p) {
                    const StepResult* a = &online->reset();
                    if (*a != pre->reset()) throw std::runtime_error("step-0 mismatch");
                    for (int d = 0; d < 8 && !a->valid_actions.empty(); ++d) {
                        const std::string action = a->valid_actions[rng.below(a->valid_actions.size())];
                        a = &online->step(action);
                        if (*a != pre->step(action)) {
                            throw std::runtime_error("seed " + std::to_string(c.seed) + " mismatch at depth " + std::to_string(d + 1));
                        }
                    }
                }
            }
            v.note(std::string(game_name(g)) + ": " + std::to_string(kEpisodes * kPathsPerEpisode) +
                   " random depth-8 paths identical");
        } catch (const CrawlLimitError& e) {
            // Estimate the full tree from the level sizes that did fit.
            std::vector<double> levels;
            for (int d = 1; d <= 3; ++d) levels.push_back(static_cast<double>(crawl(first, CrawlOptions{d}).size()));
            const double b = (levels[2] - levels[1]) / (levels[1] - levels[0]);
            double estimate = levels[2];
            double width = levels[2] - levels[1];
            for (int d = 4; d <= 8; ++d) estimate += (width *= b);
            v.fail(std::string(game_name(g)) + ": depth-8 tree does not fit the 1 GiB crawl cap (" +
                   std::to_string(e.nodes_crawled) + " nodes crawled, deepest complete depth " +
                   std::to_string(e.deepest_complete_depth) + "; branching ~" + fmt("%.1f", b) + ", ~" +
                   fmt("%.1e", estimate) + " nodes needed)");
        } catch (const std::exception& e) {
            v.fail(std::string(game_name(g)) + ": " + e.what());
        }
    }
}

// --- determinism and solvability ------------------------------------------------

std::string transcript_text(const EpisodeConfig& c)
{
    auto e = std::make_shared<const Episode>(make_episode(c));
    auto s = make_online_session(e);
    std::string out = config_to_json(c).dump();
    for (const auto& r : run_transcript(*s, e->gold_path)) out += "\n" + step_result_to_json(r).dump();
    return out;
}

void determinism(Verdict& v)
{
    for (Game g : kGames) {
        int same = 0;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            EpisodeConfig c = default_config(g, seed);
            c.params.with_doors = seed % 2 == 1;
            if (transcript_text(c) == transcript_text(c)) {
                ++same;
            } else {
                v.fail(std::string(game_name(g)) + " seed " + std::to_string(seed) + " differs between generations");
            }
        }
        v.note(std::string(game_name(g)) + ": " + std::to_string(same) + "/1000 transcripts byte-identical");
    }
}

void solvability(Verdict& v)
{
    for (Game g : kGames) {
        for (Fold f : kFolds) {
            int solved = 0;
            for (std::uint64_t n = 0; n < 1000; ++n) {
                EpisodeConfig c = default_config(g, nth_seed_in_fold(0, f, n));
                c.params.with_doors = n % 2 == 1;
                if (g == Game::CookingWorld) c.params.num_ingredients = 1 + static_cast<int>(n % 5);
                if (g == Game::Twc) c.params.difficulty = static_cast<TwcDifficulty>(n % 3);
                if (g != Game::Twc) c.params.num_locations = 1 + static_cast<int>(n % kMaxLocations);
                try {
                    auto e = std::make_shared<const Episode>(make_episode(c));
                    auto s = make_online_session(e);
                    const auto t = run_transcript(*s, e->gold_path);
                    if (t.back().succeeded && t.back().raw_score == t.back().max_score) {
                        ++solved;
                    } else {
                        v.fail(std::string(game_name(g)) + " seed " + std::to_string(c.seed) + " gold path does not succeed");
                    }
                } catch (const std::exception& ex) {
                    v.fail(std::string(game_name(g)) + " seed " + std::to_string(c.seed) + ": " + ex.what());
                }
            }
            v.note(std::string(game_name(g)) + " " + std::string(fold_name(f)) + ": " + std::to_string(solved) + "/1000 solved");
        }
    }
}

// --- valid actions ----------------------------------------------------------------

void valid_actions(Verdict& v)
{
    for (Game g : kGames) {
        int agree = 0;
        Rng rng(fnv1a(game_name(g)));
        for (int k = 0; k < 100; ++k) {
            EpisodeConfig c = default_config(g, rng.below(100000));
            c.params.with_doors = rng.chance(1, 2);
            c.params.num_distractors = static_cast<int>(rng.below(5));
            const Episode e = make_episode(c);
            const WorldState s = random_state(e, rng, static_cast<int>(rng.below(40)));
            if (surfaces(enumerate_valid_actions(s, e.task)) == brute_force_valid(s, e.task)) {
                ++agree;
            } else {
                v.fail(std::string(game_name(g)) + " seed " + std::to_string(c.seed) + ": enumeration differs from brute force");
            }
        }
        v.note(std::string(game_name(g)) + ": " + std::to_string(agree) + "/100 states match brute-force enumeration");
    }
}

// --- fold hygiene -----------------------------------------------------------------

template <class T>
std::size_t overlap(const std::set<T>& a, const std::set<T>& b)
{
    std::size_t n = 0;
    for (const auto& x : a) n += b.count(x);
    return n;
}

void fold_hygiene(Verdict& v)
{
    std::array<std::set<std::string>, 3> combos;
    std::array<std::set<std::string>, 3> targets;
    for (Fold f : kFolds) {
        const auto fi = static_cast<std::size_t>(f);
        for (std::uint64_t n = 0; n < 10000; ++n) {
            const std::uint64_t seed = nth_seed_in_fold(0, f, n);
            EpisodeConfig cook = default_config(Game::CookingWorld, seed);
            cook.generate_gold = false;
            cook.params.num_ingredients = 1 + static_cast<int>(n % 5);
            cook.params.num_locations = 1 + static_cast<int>(n % kMaxLocations);
            const Episode cooking = make_episode(cook);
            for (const auto& ing : std::get<RecipeTask>(cooking.task).ingredients) {
                combos[fi].insert(std::string(ing.name) + "|" + std::string(cut_adjective(ing.required.cut)) + "|" +
                                  std::string(cook_adjective(ing.required.cook)));
            }
            EpisodeConfig twc = default_config(Game::Twc, seed);
            twc.generate_gold = false;
            twc.params.difficulty = static_cast<TwcDifficulty>(n % 3);
            const Episode household = make_episode(twc);
            for (const auto& t : std::get<TwcTask>(household.task).targets) targets[fi].insert(std::string(t.name));
        }
    }
    const auto combo_tt = overlap(combos[0], combos[2]);
    const auto target_tt = overlap(targets[0], targets[2]);
    v.note("CookingWorld combinations per fold: " + std::to_string(combos[0].size()) + "/" + std::to_string(combos[1].size()) +
           "/" + std::to_string(combos[2].size()) + "; train∩test " + std::to_string(combo_tt) + ", train∩dev " +
           std::to_string(overlap(combos[0], combos[1])) + ", dev∩test " + std::to_string(overlap(combos[1], combos[2])));
    v.note("TWC targets per fold: " + std::to_string(targets[0].size()) + "/" + std::to_string(targets[1].size()) + "/" +
           std::to_string(targets[2].size()) + "; train∩test " + std::to_string(target_tt) + ", train∩dev " +
           std::to_string(overlap(targets[0], targets[1])) + ", dev∩test " + std::to_string(overlap(targets[1], targets[2])));
    if (combo_tt != 0) v.fail("CookingWorld train and test share combinations");
    if (target_tt != 0) v.fail("TWC train and test share target objects");
}

// --- golden transcript ------------------------------------------------------------

void golden_transcript(Verdict& v)
{
    constexpr std::uint64_t kSeed = 1601172;
    const std::vector<std::string> pinned{
        "read cookbook",       "open cutlery drawer",         "take knife",
        "take purple potato",  "move south",                  "take orange bell pepper",
        "move north",          "dice purple potato",          "cook purple potato in stove",
        "cook orange bell pepper in oven", "prepare meal", "eat meal",
    };
    const EpisodeConfig c = default_config(Game::CookingWorld, kSeed);
    auto e = std::make_shared<const Episode>(make_episode(c));
    const auto& recipe = std::get<RecipeTask>(e->task);

    std::set<std::string> rooms;
    for (const auto& cell : e->layout.cells) rooms.insert(std::string(room_name(cell.kind)));
    const bool shape = rooms == std::set<std::string>{"kitchen", "pantry", "backyard"} && recipe.ingredients.size() == 2 &&
                       recipe.distractors.size() == 2;
    v.note("episode: 3 locations (kitchen, pantry, backyard), ingredients " + std::string(recipe.ingredients[0].name) + ", " +
           std::string(recipe.ingredients[1].name) + "; distractors " + std::string(recipe.distractors[0]) + ", " +
           std::string(recipe.distractors[1]));
    if (!shape) v.fail("episode shape differs from 3 locations / 2 ingredients / 2 distractors");
    if (e->gold_path != pinned) v.fail("gold path differs from the pinned 12 commands");

    auto s = make_online_session(e);
    const auto t = run_transcript(*s, pinned);
    if (t.front().observation.rfind("You are in the kitchen.", 0) != 0) v.fail("opening line is not \"You are in the kitchen.\"");
    const StepResult& last = t.back();
    std::string shown = last.observation;
    for (std::size_t at = shown.find('\n'); at != std::string::npos; at = shown.find('\n', at)) shown.replace(at, 1, " / ");
    v.note("final: \"" + shown + "\" score " + std::to_string(last.raw_score) + "/" + std::to_string(last.max_score) +
           " after " + std::to_string(last.step_count) + " steps");
    if (!last.succeeded || last.raw_score != last.max_score || last.observation.find("Game completed.") == std::string::npos) {
        v.fail("pinned commands do not complete the game");
    }
}

// --- tree format --------------------------------------------------------------------

std::string saved(const PrecrawledTree& t)
{
    std::ostringstream out;
    save_tree(t, out);
    return out.str();
}

void tree_format(Verdict& v)
{
    int round_trips = 0;
    for (int i = 0; i < 50; ++i) {
        const Game g = kGames[i % 3];
        EpisodeConfig c = default_config(g, static_cast<std::uint64_t>(i * 13));
        c.params.with_doors = i % 2 == 1;
        const PrecrawledTree t = crawl(c, CrawlOptions{g == Game::CoinCollector ? 4 : 2});
        const std::string text = saved(t);
        const PrecrawledTree back = load_tree_text(text);
        if (back == t && saved(back) == text) {
            ++round_trips;
        } else {
            v.fail("round trip " + std::to_string(i) + " not identical");
        }
    }
    v.note(std::to_string(round_trips) + "/50 trees round-trip identically");

    EpisodeConfig c = default_config(Game::CoinCollector, 3);
    c.params.num_locations = 1;
    const std::string text = saved(crawl(c, CrawlOptions{2}));
    const Json doc = Json::parse(text);
    const Json& nodes = doc["nodes"];
    std::size_t terminal = 0;
    while (terminal < nodes.size() && !nodes[terminal]["terminal"].get<bool>()) ++terminal;
    const auto& root_children = nodes[0]["children"];
    const std::string first_key = root_children.begin().key();
    const int first_child = root_children.begin().value();
    const std::string second_key = std::next(root_children.begin()).key();

    using Edit = std::function<void(Json&)>;
    const std::vector<std::pair<std::string, Edit>> cases{
        {"missing obs", [](Json& d) { d["nodes"][1].erase("obs"); }},
        {"raw above max", [](Json& d) { d["nodes"][1]["score"]["raw"] = 5; }},
        {"normalized mismatch", [](Json& d) { d["nodes"][1]["score"]["normalized"] = "1/1"; }},
        {"terminal without outcome", [](Json& d) { d["nodes"][1]["terminal"] = true; }},
        {"child index out of range", [&](Json& d) { d["nodes"][0]["children"][first_key] = 100000; }},
        {"child key not a valid action", [&](Json& d) { d["nodes"][0]["children"]["fly north"] = first_child; }},
        {"edge back to the root", [&](Json& d) { d["nodes"][first_child]["children"]["look around"] = 0; }},
        {"node with two parents", [&](Json& d) { d["nodes"][0]["children"][second_key] = first_child; }},
        {"terminal node lists actions", [&](Json& d) { d["nodes"][terminal]["valid"] = Json::array({"look around"}); }},
        {"succeeded below max score", [&](Json& d) {
             d["nodes"][terminal]["score"]["raw"] = 0;
             d["nodes"][terminal]["score"]["normalized"] = "0/1";
         }},
    };
    int rejected = 0;
    for (const auto& [name, edit] : cases) {
        Json bad = doc;
        edit(bad);
        try {
            load_tree_text(bad.dump());
            v.fail("accepted corruption: " + name);
        } catch (const TreeFormatError& e) {
            const std::string what = e.what();
            if (what.rfind("node ", 0) == 0) {
                ++rejected;
                v.note(name + " -> " + what);
            } else {
                v.fail(name + " rejected without a node-level diagnostic: " + what);
            }
        }
    }
    v.note(std::to_string(rejected) + "/" + std::to_string(cases.size()) + " corruptions rejected with node-level diagnostics");
}

struct Criterion {
    const char* name;
    const char* title;
    void (*run)(Verdict&);
};

constexpr Criterion kCriteria[] = {
    {"throughput_online", "online random-agent throughput (coin >= 100k, cooking >= 60k sps)", throughput_online},
    {"throughput_precrawled", "precrawled playback >= 1M sps single thread", throughput_precrawled},
    {"precrawled_scaling", "precrawled multi-thread scaling >= 0.6x linear up to 8 workers", precrawled_scaling},
    {"equivalence_depth4", "online == precrawled, 20 episodes per game, exhaustive to depth 4", equivalence_depth4},
    {"equivalence_depth8", "online == precrawled, 10,000 random depth-8 paths per game", equivalence_depth8},
    {"determinism", "determinism, 1000 seeds per game", determinism},
    {"solvability", "gold paths solve 1000 seeds per game per fold", solvability},
    {"valid_actions", "valid actions equal brute-force enumeration on 100 states per game", valid_actions},
    {"fold_hygiene", "fold hygiene over 10,000 seeds per fold", fold_hygiene},
    {"golden_transcript", "pinned 12-command CookingWorld episode completes", golden_transcript},
    {"tree_format", "tree round-trip on 50 trees, 10 corruptions rejected", tree_format},
};

} // namespace

int main(int argc, char** argv)
{
    std::set<std::string> wanted(argv + 1, argv + argc);
    for (const auto& w : wanted) {
        const bool known = std::any_of(std::begin(kCriteria), std::end(kCriteria), [&](const Criterion& c) { return w == c.name; });
        if (!known) {
            std::cerr << "unknown criterion " << w << "\n";
            return 2;
        }
    }
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (!wanted.empty() && !wanted.count(c.name)) continue;
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (v.pass ? "PASS " : "FAIL ") << c.name << ": " << c.title << " [" << fmt("%.1f", secs) << " s]\n"
                  << v.detail.str() << std::flush;
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
