#pragma once

#include "wordsim/json_codec.hpp"
#include "wordsim/precrawl.hpp"
#include "wordsim/session.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordsim {

// Wire protocol v1.
//   request: {"op":"reset"|"step"|"close", "session":string, ...}
//     reset: config fields (game, seed, fold, params or flat param fields), "mode",
//            "max_depth" (precrawled), "valid_actions": false to omit the list in replies
//     step:  "action": string
//   reply:   {"ok":true, "result":{...}} or {"ok":false, "error":{"code":..., "message":...}}
namespace error_code {
inline constexpr std::string_view kBadRequest = "bad_request";
inline constexpr std::string_view kUnknownOp = "unknown_op";
inline constexpr std::string_view kUnknownSession = "unknown_session";
inline constexpr std::string_view kInvalidConfig = "invalid_config";
inline constexpr std::string_view kMissingTree = "missing_tree";
inline constexpr std::string_view kCrawlLimit = "crawl_limit";
inline constexpr std::string_view kInternal = "internal";
} // namespace error_code

Json error_reply(std::string_view code, std::string_view message);

// Session registry behind the protocol. Requests for different sessions may run
// concurrently; requests for one session are serialized.
class Dispatcher {
public:
    struct Options {
        bool crawl_on_demand = true; // precrawled resets without a loaded tree crawl one
        int default_max_depth = 3;
        std::uint64_t crawl_cap = std::uint64_t{1} << 30;
    };

    Dispatcher();
    explicit Dispatcher(Options options);

    Json handle(const Json& request);
    std::string handle_text(std::string_view request);

    void add_tree(std::shared_ptr<const PrecrawledTree> tree);
    [[nodiscard]] std::size_t session_count() const;

private:
    struct Entry {
        std::mutex mutex;
        std::unique_ptr<Session> session;
        bool with_valid = true;
    };

    Json reset(const Json& request, const std::string& id);
    Json step(const Json& request, const std::string& id);
    Json close(const std::string& id);
    std::shared_ptr<const PrecrawledTree> tree_for(const EpisodeConfig& config, int max_depth, bool depth_given);

    Options options_;
    mutable std::shared_mutex sessions_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
    std::mutex trees_mutex_;
    std::vector<std::shared_ptr<const PrecrawledTree>> trees_;
};

// Frames are a 4-byte big-endian payload length followed by the UTF-8 JSON payload.
inline constexpr std::uint32_t kMaxFrameBytes = 64U << 20;
std::string encode_frame(std::string_view payload);

enum class FrameStatus { Ok, Closed, TooLarge, IoError };
FrameStatus read_frame(int fd, std::string& payload);
bool write_frame(int fd, std::string_view payload);

// Blocking client for the framed TCP protocol.
class TcpClient {
public:
    TcpClient(const std::string& host, int port);
    ~TcpClient();
    TcpClient(const TcpClient&) = delete;
    TcpClient& operator=(const TcpClient&) = delete;

    std::string request_text(std::string_view payload);
    Json request(const Json& payload);

private:
    int fd_ = -1;
};

} // namespace wordsim
