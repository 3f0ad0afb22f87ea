#include "support.hpp"

#include "wordsim/library.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wordsim;
using namespace wordsim::testing;

namespace {

// Replays commands through the public step function used by sessions.
WorldState replay(const Episode& e, const std::vector<std::string>& commands)
{
    WorldState s = e.initial;
    for (const auto& cmd : commands) {
        const auto valid = enumerate_valid_actions(s, e.task);
        const auto idx = match_input(cmd, valid);
        if (!idx) ADD_FAILURE() << "not valid: " << cmd;
        if (!idx) break;
        advance(s, valid[*idx], e.task);
    }
    return s;
}

} // namespace

TEST(Games, GoldPathsSolveEveryGameAndFold)
{
    for (Game g : {Game::CookingWorld, Game::Twc, Game::CoinCollector}) {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const Episode e = make_episode(default_config(g, seed));
            const WorldState end = replay(e, e.gold_path);
            const ScoreState sc = score_state(end, e.task);
            EXPECT_TRUE(end.succeeded) << game_name(g) << " seed " << seed;
            EXPECT_EQ(sc.raw, sc.max_raw);
            EXPECT_DOUBLE_EQ(sc.normalized(), 1.0);
        }
    }
}

TEST(Games, CookingMaxScoreCountsIngredientsStepsAndMeal)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EpisodeConfig c = default_config(Game::CookingWorld, seed);
        c.params.num_ingredients = 1 + static_cast<int>(seed % 5);
        const Episode e = make_episode(c);
        const auto& r = std::get<RecipeTask>(e.task);
        int steps = 0;
        for (const auto& ing : r.ingredients) {
            steps += ing.required.cut != CutState::Raw;
            steps += ing.required.cook != CookState::Raw;
        }
        EXPECT_EQ(static_cast<int>(r.ingredients.size()), c.params.num_ingredients);
        // One point per ingredient taken, per preparation step, for preparing and for eating.
        EXPECT_EQ(max_raw_score(e.task), c.params.num_ingredients + steps + 2);
    }
}

TEST(Games, CookingRecipeTextListsEveryIngredient)
{
    const Episode e = make_episode(default_config(Game::CookingWorld, 1601172));
    const auto& r = std::get<RecipeTask>(e.task);
    EXPECT_EQ(r.text,
              "Gather all following ingredients and follow the directions to prepare this tasty meal.\n\n"
              "Ingredients:\n  purple potato,\n  orange bell pepper.\n\n"
              "Directions:\n  dice the purple potato,\n  fry the purple potato,\n  roast the orange bell pepper,\n  prepare meal.");
}

TEST(Games, WrongPreparationFailsTheEpisode)
{
    const Episode e = make_episode(default_config(Game::CookingWorld, 1601172));
    // The recipe wants the purple potato fried; roasting it in the oven ruins it.
    const WorldState s = replay(e, {"take purple potato", "cook purple potato in oven"});
    EXPECT_TRUE(s.failed);
    EXPECT_FALSE(s.succeeded);
    EXPECT_TRUE(enumerate_valid_actions(s, e.task).empty());
}

TEST(Games, EatingAnIngredientFailsTheEpisode)
{
    const Episode e = make_episode(default_config(Game::CookingWorld, 1601172));
    const WorldState s = replay(e, {"take purple potato", "eat purple potato"});
    EXPECT_TRUE(s.failed);
}

TEST(Games, RewardsAreEarnedOnce)
{
    const Episode e = make_episode(default_config(Game::CookingWorld, 1601172));
    WorldState s = replay(e, {"take purple potato"});
    const int after_take = score_state(s, e.task).raw;
    EXPECT_EQ(after_take, 1);
    s = replay(e, {"take purple potato", "put purple potato in counter", "take purple potato"});
    EXPECT_EQ(score_state(s, e.task).raw, 1);
}

TEST(Games, CoinSingleRoomGoldIsTakeCoin)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        EpisodeConfig c = default_config(Game::CoinCollector, seed);
        c.params.num_locations = 1;
        const Episode e = make_episode(c);
        EXPECT_EQ(e.gold_path, std::vector<std::string>{"take coin"});
    }
}

TEST(Games, CoinGoldPathIsAShortestRoute)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        EpisodeConfig c = default_config(Game::CoinCollector, seed);
        c.params.num_locations = 1 + static_cast<int>(seed % kMaxLocations);
        const Episode e = make_episode(c);
        const auto& t = std::get<CoinTask>(e.task);
        const auto dist = layout_distances(e.layout, index_of(e.layout.start));
        EXPECT_EQ(e.gold_path.size(), static_cast<std::size_t>(dist[index_of(t.coin_location)]) + 1) << "seed " << seed;
        EXPECT_EQ(e.gold_path.back(), "take coin");
        if (c.params.num_locations > 1) {
            EXPECT_NE(t.coin_location, e.layout.start);
        }
    }
}

TEST(Games, TwcTargetsStartAwayFromTheirDestinations)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EpisodeConfig c = default_config(Game::Twc, seed);
        c.params.difficulty = static_cast<TwcDifficulty>(seed % 3);
        const Episode e = make_episode(c);
        const auto& t = std::get<TwcTask>(e.task);
        ASSERT_FALSE(t.targets.empty());
        for (const auto& target : t.targets) {
            ASSERT_FALSE(target.destinations.empty());
            const Parent p = e.initial.object(target.object).parent;
            for (ObjectId d : target.destinations) EXPECT_FALSE(p == Parent::object(d));
        }
        const std::size_t rooms = c.params.difficulty == TwcDifficulty::Hard ? 2 : 1;
        EXPECT_EQ(e.layout.cells.size(), rooms);
    }
}

TEST(Games, GeneratedWorldsSatisfyInvariants)
{
    for (Game g : {Game::CookingWorld, Game::Twc, Game::CoinCollector}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            EpisodeConfig c = default_config(g, seed);
            c.params.with_doors = true;
            c.params.num_distractors = static_cast<int>(seed % 6);
            const Episode e = make_episode(c);
            EXPECT_EQ(check_invariants(e.initial), "") << game_name(g) << " seed " << seed;
        }
    }
}

TEST(Games, ScoreUpdateIgnoresOutcomesAfterTerminal)
{
    const Episode e = make_episode(default_config(Game::CoinCollector, 0));
    WorldState s = replay(e, e.gold_path);
    ASSERT_TRUE(s.succeeded);
    const WorldState frozen = s;
    StepOutcome bogus;
    bogus.triggered_failure = true;
    score_update(s, bogus, e.task);
    EXPECT_FALSE(s.failed);
    EXPECT_EQ(s.score_ledger, frozen.score_ledger);
}
