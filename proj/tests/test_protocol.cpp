#include "support.hpp"

#include "wordsim/json_codec.hpp"
#include "wordsim/protocol.hpp"
#include "wordsim/server.hpp"

#include <httplib.h>

#include <gtest/gtest.h>

#include <sys/socket.h>
#include <unistd.h>

#include <thread>

using namespace wordsim;
using namespace wordsim::testing;

namespace {

Json reset_request(const std::string& id, const EpisodeConfig& c, const char* mode = "online")
{
    Json j = config_to_json(c);
    j["op"] = "reset";
    j["session"] = id;
    j["mode"] = mode;
    return j;
}

Json step_request(const std::string& id, const std::string& action)
{
    return Json{{"op", "step"}, {"session", id}, {"action", action}};
}

std::string code_of(const Json& reply)
{
    return reply.at("error").at("code").get<std::string>();
}

// Runs a TcpServer on an ephemeral port for the lifetime of the fixture.
struct LiveServer {
    Dispatcher dispatcher;
    TcpServer server{dispatcher, "127.0.0.1", 0};
    std::thread thread{[this] { server.run(); }};

    ~LiveServer()
    {
        server.stop();
        thread.join();
    }
};

} // namespace

TEST(Dispatcher, ResetThenLook)
{
    Dispatcher d;
    const Json r0 = d.handle(reset_request("a", default_config(Game::CookingWorld, 1601172)));
    ASSERT_TRUE(r0["ok"].get<bool>());
    const Json r1 = d.handle(step_request("a", "look around"));
    ASSERT_TRUE(r1["ok"].get<bool>());
    EXPECT_EQ(r1["result"]["observation"], r0["result"]["look"]);
    EXPECT_EQ(r1["result"]["step_count"], 1);
}

TEST(Dispatcher, ErrorCodes)
{
    Dispatcher::Options o;
    o.crawl_on_demand = false;
    Dispatcher d(o);
    EXPECT_EQ(code_of(Json::parse(d.handle_text("{not json"))), "bad_request");
    EXPECT_EQ(code_of(d.handle(Json::array())), "bad_request");
    EXPECT_EQ(code_of(d.handle(Json{{"op", "reset"}})), "bad_request");
    EXPECT_EQ(code_of(d.handle(Json{{"op", "fly"}, {"session", "x"}})), "unknown_op");
    EXPECT_EQ(code_of(d.handle(step_request("nobody", "look around"))), "unknown_session");
    EXPECT_EQ(code_of(d.handle(Json{{"op", "close"}, {"session", "nobody"}})), "unknown_session");

    Json bad_fold = reset_request("x", default_config(Game::CoinCollector, 1));
    bad_fold["fold"] = "dev";
    EXPECT_EQ(code_of(d.handle(bad_fold)), "invalid_config");
    Json too_big = reset_request("x", default_config(Game::CoinCollector, 1));
    too_big["params"]["num_locations"] = 40;
    EXPECT_EQ(code_of(d.handle(too_big)), "invalid_config");
    EXPECT_EQ(code_of(d.handle(reset_request("x", default_config(Game::CoinCollector, 1), "precrawled"))), "missing_tree");
    EXPECT_EQ(d.session_count(), 0U);
}

TEST(Dispatcher, PrecrawledUsesLoadedTreesOrCrawls)
{
    const EpisodeConfig c = default_config(Game::CoinCollector, 6);
    Dispatcher::Options o;
    o.crawl_on_demand = false;
    Dispatcher d(o);
    d.add_tree(std::make_shared<const PrecrawledTree>(crawl(c, CrawlOptions{2})));
    const Json pre = d.handle(reset_request("p", c, "precrawled"));
    const Json on = d.handle(reset_request("o", c, "online"));
    ASSERT_TRUE(pre["ok"].get<bool>());
    EXPECT_EQ(pre["result"], on["result"]);

    Dispatcher crawling;
    Json req = reset_request("q", c, "precrawled");
    req["max_depth"] = 1;
    EXPECT_TRUE(crawling.handle(req)["ok"].get<bool>());
}

TEST(Dispatcher, CloseForgetsTheSession)
{
    Dispatcher d;
    d.handle(reset_request("a", default_config(Game::Twc, 0)));
    EXPECT_EQ(d.session_count(), 1U);
    const Json closed = d.handle(Json{{"op", "close"}, {"session", "a"}});
    EXPECT_TRUE(closed["result"]["closed"].get<bool>());
    EXPECT_EQ(d.session_count(), 0U);
}

TEST(Dispatcher, ValidActionsCanBeSuppressed)
{
    Dispatcher d;
    Json req = reset_request("a", default_config(Game::Twc, 0));
    req["valid_actions"] = false;
    const Json r = d.handle(req);
    EXPECT_FALSE(r["result"].contains("valid_actions"));
    EXPECT_FALSE(d.handle(step_request("a", "look around"))["result"].contains("valid_actions"));
}

TEST(Framing, BigEndianLengthPrefix)
{
    const std::string f = encode_frame("abc");
    ASSERT_EQ(f.size(), 7U);
    EXPECT_EQ(f.substr(0, 4), std::string("\0\0\0\3", 4));
    EXPECT_EQ(f.substr(4), "abc");
}

TEST(TcpServer, InterleavedSessionsMatchSoloRuns)
{
    const EpisodeConfig a = default_config(Game::CookingWorld, 1601172);
    const EpisodeConfig b = default_config(Game::CoinCollector, 12);
    const std::vector<std::string> path_a = make_episode(a).gold_path;
    const std::vector<std::string> path_b = make_episode(b).gold_path;

    auto solo = [](const EpisodeConfig& c, const std::vector<std::string>& path) {
        auto s = make_online_session(c);
        std::vector<Json> out;
        for (const auto& r : run_transcript(*s, path)) out.push_back(step_result_to_json(r));
        return out;
    };
    const auto want_a = solo(a, path_a);
    const auto want_b = solo(b, path_b);

    LiveServer live;
    TcpClient c1("127.0.0.1", live.server.port());
    TcpClient c2("127.0.0.1", live.server.port());
    std::vector<Json> got_a{c1.request(reset_request("A", a))["result"]};
    std::vector<Json> got_b{c2.request(reset_request("B", b))["result"]};
    for (std::size_t i = 0; i < std::max(path_a.size(), path_b.size()); ++i) {
        if (i < path_a.size()) got_a.push_back(c1.request(step_request("A", path_a[i]))["result"]);
        if (i < path_b.size()) got_b.push_back(c2.request(step_request("B", path_b[i]))["result"]);
    }
    EXPECT_EQ(got_a, want_a);
    EXPECT_EQ(got_b, want_b);
    EXPECT_TRUE(got_a.back()["succeeded"].get<bool>());
}

TEST(TcpServer, MalformedFrameKeepsTheConnection)
{
    LiveServer live;
    TcpClient c("127.0.0.1", live.server.port());
    const Json bad = Json::parse(c.request_text("}{"));
    EXPECT_EQ(code_of(bad), "bad_request");
    const Json ok = c.request(reset_request("s", default_config(Game::CoinCollector, 0)));
    EXPECT_TRUE(ok["ok"].get<bool>());
}

TEST(HttpFrontend, PostApiMirrorsTheWireProtocol)
{
    Dispatcher d;
    HttpFrontend http(d);
    const int port = http.bind("127.0.0.1", 0);
    ASSERT_GT(port, 0);
    std::thread t([&] { http.run(); });

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/health");
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    auto res = client.Post("/api", reset_request("h", default_config(Game::CoinCollector, 0)).dump(), "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
    const Json reply = Json::parse(res->body);
    EXPECT_TRUE(reply["ok"].get<bool>());
    auto bad = client.Post("/api", "nope", "application/json");
    ASSERT_TRUE(bad);
    EXPECT_EQ(code_of(Json::parse(bad->body)), "bad_request");

    http.stop();
    t.join();
}
