#include "support.hpp"

#include "wordsim/json_codec.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace wordsim;
using namespace wordsim::testing;

namespace {

EpisodeConfig small_coin()
{
    EpisodeConfig c = default_config(Game::CoinCollector, 3);
    c.params.num_locations = 2;
    return c;
}

std::string saved(const PrecrawledTree& t)
{
    std::ostringstream out;
    save_tree(t, out);
    return out.str();
}

// Parses a saved tree, lets the callback corrupt it, and returns the loader's complaint.
template <class F>
std::string corrupt(const std::string& text, F&& edit)
{
    Json doc = Json::parse(text);
    edit(doc);
    try {
        load_tree_text(doc.dump());
    } catch (const TreeFormatError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Crawl, DepthZeroIsTheRootOnly)
{
    const PrecrawledTree t = crawl(small_coin(), CrawlOptions{0});
    EXPECT_EQ(t.size(), 1U);
}

TEST(Crawl, DepthOneAddsOneChildPerValidAction)
{
    for (Game g : {Game::CookingWorld, Game::Twc, Game::CoinCollector}) {
        const Episode e = make_episode(default_config(g, 4));
        const PrecrawledTree t = crawl(e, CrawlOptions{1});
        EXPECT_EQ(t.size(), 1 + enumerate_valid_actions(e.initial, e.task).size());
    }
}

TEST(Crawl, NodeCountMatchesIndependentEnumeration)
{
    // Count the reachable (state, depth) paths by direct recursion over the engine.
    const Episode e = make_episode(small_coin());
    std::function<std::size_t(const WorldState&, int)> count = [&](const WorldState& s, int depth) -> std::size_t {
        std::size_t n = 1;
        if (depth == 0) return n;
        for (const auto& a : enumerate_valid_actions(s, e.task)) {
            WorldState next = s;
            advance(next, a, e.task);
            n += count(next, depth - 1);
        }
        return n;
    };
    for (int depth = 0; depth <= 4; ++depth) {
        EXPECT_EQ(crawl(e, CrawlOptions{depth}).size(), count(e.initial, depth)) << "depth " << depth;
    }
}

TEST(Crawl, SizeCapStopsWithDiagnostics)
{
    try {
        crawl(default_config(Game::CookingWorld, 0), CrawlOptions{6, 1 << 20});
        FAIL() << "expected CrawlLimitError";
    } catch (const CrawlLimitError& e) {
        EXPECT_GT(e.nodes_crawled, 0U);
        EXPECT_GT(e.estimated_bytes, std::uint64_t{1} << 20);
        EXPECT_GE(e.deepest_complete_depth, 0);
        EXPECT_LT(e.deepest_complete_depth, 6);
    }
}

TEST(Crawl, EstimatedSizeTracksTheSerializedSize)
{
    const PrecrawledTree t = crawl(default_config(Game::Twc, 2), CrawlOptions{2});
    const double actual = static_cast<double>(saved(t).size());
    EXPECT_NEAR(static_cast<double>(estimated_size(t)) / actual, 1.0, 0.05);
}

TEST(TreeFormat, SaveLoadRoundTrip)
{
    for (Game g : {Game::CookingWorld, Game::Twc, Game::CoinCollector}) {
        const PrecrawledTree t = crawl(default_config(g, 10), CrawlOptions{2});
        const std::string text = saved(t);
        const PrecrawledTree back = load_tree_text(text);
        EXPECT_TRUE(back == t);
        EXPECT_EQ(saved(back), text);
    }
}

TEST(TreeFormat, HeaderCarriesConfigAndVersion)
{
    const Json doc = Json::parse(saved(crawl(small_coin(), CrawlOptions{1})));
    const Json& h = doc["header"];
    EXPECT_EQ(h["game"], "coincollector");
    EXPECT_EQ(h["seed"], 3);
    EXPECT_EQ(h["fold"], "train");
    EXPECT_EQ(h["params"]["num_locations"], 2);
    EXPECT_EQ(h["maxDepth"], 1);
    EXPECT_EQ(h["formatVersion"], 1);
    EXPECT_EQ(h["nodeCount"], doc["nodes"].size());
}

TEST(TreeFormat, CorruptionsAreReportedPerNode)
{
    const std::string text = saved(crawl(small_coin(), CrawlOptions{2}));
    const Json doc = Json::parse(text);
    const std::string first_child = doc["nodes"][0]["children"].begin().key();
    const int child = doc["nodes"][0]["children"].begin().value();

    EXPECT_NE(corrupt(text, [](Json& d) { d["nodes"][1].erase("obs"); }).find("node 1:"), std::string::npos);
    EXPECT_NE(corrupt(text, [](Json& d) { d["nodes"][2]["score"]["raw"] = 9; }).find("node 2:"), std::string::npos);
    EXPECT_NE(corrupt(text, [](Json& d) { d["nodes"][1]["score"]["normalized"] = "0.0"; }).find("node 1:"), std::string::npos);
    EXPECT_NE(corrupt(text, [](Json& d) { d["nodes"][1]["terminal"] = true; }).find("node 1:"), std::string::npos);
    EXPECT_NE(corrupt(text, [&](Json& d) { d["nodes"][0]["children"][first_child] = 99999; }).find("node 0:"), std::string::npos);
    EXPECT_NE(corrupt(text, [&](Json& d) { d["nodes"][0]["children"]["dance"] = child; }).find("node 0:"), std::string::npos);
    EXPECT_NE(corrupt(text, [&](Json& d) { d["nodes"][child]["children"]["look around"] = 0; }).find("node"), std::string::npos);
    EXPECT_FALSE(corrupt(text, [](Json& d) { d["header"]["formatVersion"] = 2; }).empty());
    EXPECT_FALSE(corrupt(text, [](Json& d) { d["header"]["nodeCount"] = 1; }).empty());
    EXPECT_FALSE(corrupt(text, [](Json& d) { d["header"]["maxDepth"] = 1; }).empty());
    EXPECT_FALSE(corrupt(text, [](Json& d) { d["header"]["fold"] = "test"; }).empty());

    EXPECT_THROW(load_tree_text(text.substr(0, text.size() / 2)), TreeFormatError);
}
