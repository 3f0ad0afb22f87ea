#include "support.hpp"

#include "wordsim/bench.hpp"
#include "wordsim/json_codec.hpp"

#include <gtest/gtest.h>

using namespace wordsim;
using namespace wordsim::testing;

TEST(Session, ResetIsRepeatable)
{
    auto s = make_online_session(default_config(Game::CookingWorld, 1601172));
    const StepResult first = s->reset();
    s->step("read cookbook");
    EXPECT_EQ(s->reset(), first);
    EXPECT_EQ(first.step_count, 0U);
    EXPECT_EQ(first.raw_score, 0);
    EXPECT_EQ(first.observation.rfind("You are in the kitchen.", 0), 0U);
    EXPECT_EQ(first.observation, first.look);
}

TEST(Session, LookAroundEchoesTheLookField)
{
    auto s = make_online_session(default_config(Game::Twc, 7));
    const StepResult r0 = s->reset();
    const StepResult& r1 = s->step("look around");
    EXPECT_EQ(r1.observation, r0.look);
}

TEST(Session, UnrecognizedInputOnlyCountsAStep)
{
    auto s = make_online_session(default_config(Game::CoinCollector, 2));
    const StepResult r0 = s->reset();
    const StepResult r1 = s->step("xyzzy");
    EXPECT_EQ(r1.observation, kUnrecognized);
    EXPECT_EQ(r1.step_count, 1U);
    EXPECT_EQ(r1.look, r0.look);
    EXPECT_EQ(r1.valid_actions, r0.valid_actions);
    EXPECT_EQ(r1.raw_score, r0.raw_score);
}

TEST(Session, ReferenceSequenceCompletesTheGame)
{
    auto s = make_online_session(default_config(Game::CookingWorld, 1601172));
    const std::vector<std::string> commands{
        "read cookbook",       "open cutlery drawer",        "take knife",
        "take purple potato",  "move south",                 "take orange bell pepper",
        "move north",          "dice purple potato",         "cook purple potato in stove",
        "cook orange bell pepper with the oven", "prepare meal", "eat meal",
    };
    const auto t = run_transcript(*s, commands);
    EXPECT_EQ(t[1].observation, std::get<RecipeTask>(make_episode(s->config()).task).text);
    EXPECT_EQ(t[2].observation, "You open the cutlery drawer. The cutlery drawer contains a knife.");
    EXPECT_EQ(t[3].observation, "You take the knife.");
    EXPECT_EQ(t[8].observation, "You dice the purple potato.");
    EXPECT_EQ(t[9].observation, "You fry the purple potato with the stove.");
    EXPECT_EQ(t[10].observation, "You roast the orange bell pepper with the oven.");
    EXPECT_EQ(t[11].observation, "The meal has been added to your inventory.");
    const StepResult& last = t.back();
    EXPECT_NE(last.observation.find("Game completed."), std::string::npos);
    EXPECT_TRUE(last.succeeded);
    EXPECT_EQ(last.raw_score, last.max_score);
    EXPECT_TRUE(last.valid_actions.empty());
    EXPECT_EQ(last.step_count, 12U);
}

TEST(Session, TerminalResultsAreFrozen)
{
    auto s = make_online_session(default_config(Game::CookingWorld, 1601172));
    s->reset();
    s->step("take purple potato");
    const StepResult failed = s->step("eat purple potato");
    ASSERT_TRUE(failed.failed);
    EXPECT_TRUE(s->done());
    EXPECT_EQ(s->step("look around"), failed);
    EXPECT_EQ(s->step("xyzzy"), failed);
    EXPECT_FALSE(s->step_index(0));
}

TEST(Session, PrecrawledMatchesOnlineWithinDepth)
{
    for (Game g : {Game::CookingWorld, Game::Twc, Game::CoinCollector}) {
        const EpisodeConfig c = default_config(g, 21);
        auto tree = std::make_shared<const PrecrawledTree>(crawl(c, CrawlOptions{3}));
        auto online = make_online_session(c);
        auto pre = make_precrawled_session(tree);
        EXPECT_EQ(online->reset(), pre->reset());
        Rng rng(5);
        for (int path = 0; path < 30; ++path) {
            const StepResult* a = &online->reset();
            pre->reset();
            for (int d = 0; d < 3 && !a->valid_actions.empty(); ++d) {
                const std::string action = a->valid_actions[rng.below(a->valid_actions.size())];
                a = &online->step(action);
                ASSERT_EQ(*a, pre->step(action)) << game_name(g) << " " << action;
            }
        }
        // Off-list input behaves the same in both modes.
        online->reset();
        pre->reset();
        EXPECT_EQ(online->step("xyzzy"), pre->step("xyzzy"));
        EXPECT_EQ(online->step("LOOK AROUND"), pre->step("LOOK AROUND"));
    }
}

TEST(Session, PrecrawledBeyondDepthIsExhausted)
{
    auto tree = std::make_shared<const PrecrawledTree>(crawl(default_config(Game::Twc, 3), CrawlOptions{1}));
    auto s = make_precrawled_session(tree);
    s->reset();
    s->step("look around");
    const std::size_t listed = s->valid_count();
    const StepResult& r = s->step("look around");
    // The cursor stays on the leaf: its actions are still listed but none can be taken.
    EXPECT_EQ(r.observation, kExhausted);
    EXPECT_EQ(r.step_count, 2U);
    EXPECT_EQ(s->valid_count(), listed);
    EXPECT_FALSE(s->step_index(0));
}

TEST(Session, StepResultJsonRoundTrip)
{
    auto s = make_online_session(default_config(Game::CookingWorld, 5));
    const StepResult r = s->reset();
    const Json j = step_result_to_json(r);
    EXPECT_EQ(step_result_from_json(j), r);
    EXPECT_FALSE(step_result_to_json(r, false).contains("valid_actions"));
    EXPECT_DOUBLE_EQ(j["normalized_score"].get<double>(), 0.0);
}

TEST(Bench, ZeroStepsIsWellFormed)
{
    BenchOptions o;
    o.base = default_config(Game::CoinCollector, 0);
    o.steps = 0;
    const BenchReport r = run_bench(o);
    EXPECT_EQ(r.steps, 0U);
    const Json j = Json::parse(bench_report_json(o, r));
    EXPECT_EQ(j["steps"], 0);
}

TEST(Bench, StepAccountingIsExact)
{
    for (bool materialize : {false, true}) {
        BenchOptions o;
        o.base = default_config(Game::Twc, 0);
        o.steps = 10007;
        o.threads = 3;
        o.materialize = materialize;
        const BenchReport r = run_bench(o);
        EXPECT_EQ(r.steps, 10007U);
        std::uint64_t sum = 0;
        for (auto n : r.per_thread_steps) sum += n;
        EXPECT_EQ(sum, 10007U);
    }
}

TEST(Bench, NthSeedStaysInFold)
{
    for (Fold f : {Fold::Train, Fold::Dev, Fold::Test}) {
        std::uint64_t prev = 0;
        for (std::uint64_t n = 0; n < 50; ++n) {
            const auto s = nth_seed_in_fold(0, f, n);
            EXPECT_EQ(fold_of_seed(s), f);
            if (n > 0) {
                EXPECT_GT(s, prev);
            }
            prev = s;
        }
    }
}
