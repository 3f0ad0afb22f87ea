#include "wordsim/protocol.hpp"

#include "wordsim/games.hpp"
#include "wordsim/variation.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace wordsim {

Json error_reply(std::string_view code, std::string_view message)
{
    Json j = Json::object();
    j["ok"] = false;
    j["error"] = Json{{"code", code}, {"message", message}};
    return j;
}

namespace {

Json ok_reply(Json result)
{
    Json j = Json::object();
    j["ok"] = true;
    j["result"] = std::move(result);
    return j;
}

struct RequestError {
    std::string_view code;
    std::string message;
};

} // namespace

Dispatcher::Dispatcher() : Dispatcher(Options{}) {}

Dispatcher::Dispatcher(Options options) : options_(options) {}

void Dispatcher::add_tree(std::shared_ptr<const PrecrawledTree> tree)
{
    std::lock_guard lock(trees_mutex_);
    trees_.push_back(std::move(tree));
}

std::size_t Dispatcher::session_count() const
{
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

std::string Dispatcher::handle_text(std::string_view request)
{
    Json parsed;
    try {
        parsed = Json::parse(request.begin(), request.end());
    } catch (const Json::parse_error& e) {
        return error_reply(error_code::kBadRequest, std::string("malformed JSON: ") + e.what()).dump();
    }
    return handle(parsed).dump();
}

Json Dispatcher::handle(const Json& request)
{
    try {
        if (!request.is_object()) throw RequestError{error_code::kBadRequest, "request must be a JSON object"};
        auto op = request.find("op");
        auto session = request.find("session");
        if (op == request.end() || !op->is_string()) throw RequestError{error_code::kBadRequest, "missing string field \"op\""};
        if (session == request.end() || !session->is_string()) {
            throw RequestError{error_code::kBadRequest, "missing string field \"session\""};
        }
        const auto& name = op->get_ref<const std::string&>();
        const auto& id = session->get_ref<const std::string&>();
        if (name == "reset") return reset(request, id);
        if (name == "step") return step(request, id);
        if (name == "close") return close(id);
        throw RequestError{error_code::kUnknownOp, "unknown op \"" + name + "\""};
    } catch (const RequestError& e) {
        return error_reply(e.code, e.message);
    } catch (const ConfigError& e) {
        return error_reply(error_code::kInvalidConfig, e.what());
    } catch (const GenerationError& e) {
        return error_reply(error_code::kInvalidConfig, e.what());
    } catch (const MapGenError& e) {
        return error_reply(error_code::kInvalidConfig, e.what());
    } catch (const CrawlLimitError& e) {
        return error_reply(error_code::kCrawlLimit, e.what());
    } catch (const std::exception& e) {
        return error_reply(error_code::kInternal, e.what());
    }
}

std::shared_ptr<const PrecrawledTree> Dispatcher::tree_for(const EpisodeConfig& config, int max_depth, bool depth_given)
{
    std::lock_guard lock(trees_mutex_);
    for (const auto& tree : trees_) {
        EpisodeConfig a = tree->header.config;
        EpisodeConfig b = config;
        a.generate_gold = b.generate_gold = true;
        if (a == b && (!depth_given || tree->header.max_depth == max_depth)) return tree;
    }
    if (!options_.crawl_on_demand) {
        throw RequestError{error_code::kMissingTree, "no precrawled tree is loaded for this config"};
    }
    auto tree = std::make_shared<const PrecrawledTree>(crawl(config, CrawlOptions{max_depth, options_.crawl_cap}));
    trees_.push_back(tree);
    return tree;
}

Json Dispatcher::reset(const Json& request, const std::string& id)
{
    const EpisodeConfig config = config_from_json(request);
    Mode mode = Mode::Online;
    if (auto m = request.find("mode"); m != request.end()) {
        const auto parsed = m->is_string() ? parse_mode(m->get<std::string>()) : std::nullopt;
        if (!parsed) throw RequestError{error_code::kBadRequest, "mode must be \"online\" or \"precrawled\""};
        mode = *parsed;
    }
    bool with_valid = true;
    if (auto v = request.find("valid_actions"); v != request.end()) {
        if (!v->is_boolean()) throw RequestError{error_code::kBadRequest, "valid_actions must be a boolean"};
        with_valid = v->get<bool>();
    }

    std::unique_ptr<Session> session;
    if (mode == Mode::Online) {
        session = make_online_session(config);
    } else {
        int depth = options_.default_max_depth;
        const auto d = request.find("max_depth");
        if (d != request.end()) {
            if (!d->is_number_integer() || d->get<std::int64_t>() < 0 || d->get<std::int64_t>() > 64) {
                throw RequestError{error_code::kBadRequest, "max_depth must be an integer in 0..64"};
            }
            depth = d->get<int>();
        }
        if (config.fold != fold_of_seed(config.seed)) {
            throw ConfigError("seed " + std::to_string(config.seed) + " does not belong to fold " + std::string(fold_name(config.fold)));
        }
        session = make_precrawled_session(tree_for(config, depth, d != request.end()));
    }

    auto entry = std::make_shared<Entry>();
    entry->with_valid = with_valid;
    Json result = step_result_to_json(session->reset(), with_valid);
    entry->session = std::move(session);
    {
        std::unique_lock lock(sessions_mutex_);
        sessions_[id] = std::move(entry);
    }
    return ok_reply(std::move(result));
}

Json Dispatcher::step(const Json& request, const std::string& id)
{
    auto action = request.find("action");
    if (action == request.end() || !action->is_string()) throw RequestError{error_code::kBadRequest, "missing string field \"action\""};
    std::shared_ptr<Entry> entry;
    {
        std::shared_lock lock(sessions_mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) throw RequestError{error_code::kUnknownSession, "unknown session \"" + id + "\""};
        entry = it->second;
    }
    std::lock_guard lock(entry->mutex);
    return ok_reply(step_result_to_json(entry->session->step(action->get_ref<const std::string&>()), entry->with_valid));
}

Json Dispatcher::close(const std::string& id)
{
    std::unique_lock lock(sessions_mutex_);
    if (sessions_.erase(id) == 0) throw RequestError{error_code::kUnknownSession, "unknown session \"" + id + "\""};
    return ok_reply(Json{{"closed", true}});
}

std::string encode_frame(std::string_view payload)
{
    const auto n = static_cast<std::uint32_t>(payload.size());
    std::string out;
    out.reserve(payload.size() + 4);
    out += static_cast<char>((n >> 24) & 0xFF);
    out += static_cast<char>((n >> 16) & 0xFF);
    out += static_cast<char>((n >> 8) & 0xFF);
    out += static_cast<char>(n & 0xFF);
    out += payload;
    return out;
}

namespace {

// Reads exactly n bytes; returns the count read before EOF, or -1 on error.
long read_exact(int fd, char* buf, std::size_t n)
{
    std::size_t got = 0;
    while (got < n) {
        const ssize_t r = ::recv(fd, buf + got, n - got, 0);
        if (r == 0) break;
        if (r < 0) {
            if (errno == EINTR) continue;
            return -1;
        }
        got += static_cast<std::size_t>(r);
    }
    return static_cast<long>(got);
}

} // namespace

FrameStatus read_frame(int fd, std::string& payload)
{
    unsigned char header[4];
    const long h = read_exact(fd, reinterpret_cast<char*>(header), 4);
    if (h == 0) return FrameStatus::Closed;
    if (h != 4) return FrameStatus::IoError;
    const std::uint32_t n = (std::uint32_t{header[0]} << 24) | (std::uint32_t{header[1]} << 16) |
                            (std::uint32_t{header[2]} << 8) | std::uint32_t{header[3]};
    if (n > kMaxFrameBytes) return FrameStatus::TooLarge;
    payload.resize(n);
    if (n > 0 && read_exact(fd, payload.data(), n) != static_cast<long>(n)) return FrameStatus::IoError;
    return FrameStatus::Ok;
}

bool write_frame(int fd, std::string_view payload)
{
    const std::string frame = encode_frame(payload);
    std::size_t sent = 0;
    while (sent < frame.size()) {
        const ssize_t w = ::send(fd, frame.data() + sent, frame.size() - sent, MSG_NOSIGNAL);
        if (w < 0) {
            if (errno == EINTR) continue;
            return false;
        }
        sent += static_cast<std::size_t>(w);
    }
    return true;
}

TcpClient::TcpClient(const std::string& host, int port)
{
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* found = nullptr;
    const std::string service = std::to_string(port);
    if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &found); rc != 0) {
        throw std::runtime_error("cannot resolve " + host + ": " + ::gai_strerror(rc));
    }
    for (addrinfo* a = found; a; a = a->ai_next) {
        fd_ = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
        if (fd_ < 0) continue;
        if (::connect(fd_, a->ai_addr, a->ai_addrlen) == 0) break;
        ::close(fd_);
        fd_ = -1;
    }
    ::freeaddrinfo(found);
    if (fd_ < 0) throw std::runtime_error("cannot connect to " + host + ":" + service);
}

TcpClient::~TcpClient()
{
    if (fd_ >= 0) ::close(fd_);
}

std::string TcpClient::request_text(std::string_view payload)
{
    if (!write_frame(fd_, payload)) throw std::runtime_error("send failed");
    std::string reply;
    if (read_frame(fd_, reply) != FrameStatus::Ok) throw std::runtime_error("connection lost while waiting for a reply");
    return reply;
}

Json TcpClient::request(const Json& payload)
{
    return Json::parse(request_text(payload.dump()));
}

} // namespace wordsim
