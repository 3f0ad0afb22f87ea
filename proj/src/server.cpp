#include "wordsim/server.hpp"

#include <httplib.h>

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace wordsim {

TcpServer::TcpServer(Dispatcher& dispatcher, const std::string& host, int port) : dispatcher_(dispatcher)
{
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = AI_PASSIVE;
    addrinfo* found = nullptr;
    const std::string service = std::to_string(port);
    if (const int rc = ::getaddrinfo(host.empty() ? nullptr : host.c_str(), service.c_str(), &hints, &found); rc != 0) {
        throw std::runtime_error("cannot resolve " + host + ": " + ::gai_strerror(rc));
    }
    for (addrinfo* a = found; a; a = a->ai_next) {
        listen_fd_ = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
        if (listen_fd_ < 0) continue;
        int yes = 1;
        ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
        if (::bind(listen_fd_, a->ai_addr, a->ai_addrlen) == 0 && ::listen(listen_fd_, 64) == 0) break;
        ::close(listen_fd_);
        listen_fd_ = -1;
    }
    ::freeaddrinfo(found);
    if (listen_fd_ < 0) throw std::runtime_error("cannot listen on " + host + ":" + service + ": " + std::strerror(errno));

    sockaddr_storage bound{};
    socklen_t len = sizeof bound;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
    if (bound.ss_family == AF_INET) {
        port_ = ntohs(reinterpret_cast<sockaddr_in*>(&bound)->sin_port);
    } else {
        port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&bound)->sin6_port);
    }
}

TcpServer::~TcpServer()
{
    stop();
    for (auto& t : connections_) {
        if (t.joinable()) t.join();
    }
    if (listen_fd_ >= 0) ::close(listen_fd_);
}

void TcpServer::run()
{
    while (!stopping_) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            if (errno == EINTR || errno == ECONNABORTED) continue;
            break; // listening socket shut down
        }
        std::lock_guard lock(connections_mutex_);
        if (stopping_) {
            ::close(fd);
            break;
        }
        open_fds_.push_back(fd);
        connections_.emplace_back([this, fd] { serve_connection(fd); });
    }
}

void TcpServer::stop()
{
    if (stopping_.exchange(true)) return;
    if (listen_fd_ >= 0) ::shutdown(listen_fd_, SHUT_RDWR);
    std::lock_guard lock(connections_mutex_);
    for (int fd : open_fds_) ::shutdown(fd, SHUT_RDWR);
}

void TcpServer::serve_connection(int fd)
{
    std::string payload;
    for (;;) {
        const FrameStatus status = read_frame(fd, payload);
        if (status == FrameStatus::TooLarge) {
            // The stream cannot be resynchronized after an oversized length; reply and hang up.
            write_frame(fd, error_reply(error_code::kBadRequest, "frame exceeds the size limit").dump());
            break;
        }
        if (status != FrameStatus::Ok) break;
        if (!write_frame(fd, dispatcher_.handle_text(payload))) break;
    }
    std::lock_guard lock(connections_mutex_);
    std::erase(open_fds_, fd);
    ::close(fd);
}

struct HttpFrontend::Impl {
    Dispatcher& dispatcher;
    httplib::Server server;
};

namespace {

void allow_cors(httplib::Response& res)
{
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "POST, GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

} // namespace

HttpFrontend::HttpFrontend(Dispatcher& dispatcher) : impl_(new Impl{dispatcher, {}})
{
    auto& server = impl_->server;
    server.Post("/api", [this](const httplib::Request& req, httplib::Response& res) {
        allow_cors(res);
        res.set_content(impl_->dispatcher.handle_text(req.body), "application/json");
    });
    server.Options("/api", [](const httplib::Request&, httplib::Response& res) {
        allow_cors(res);
        res.status = 204;
    });
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        allow_cors(res);
        res.set_content(R"({"ok":true})", "application/json");
    });
    server.set_payload_max_length(kMaxFrameBytes);
}

HttpFrontend::~HttpFrontend()
{
    stop();
}

int HttpFrontend::bind(const std::string& host, int port)
{
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpFrontend::run()
{
    return impl_->server.listen_after_bind();
}

void HttpFrontend::stop()
{
    impl_->server.stop();
}

} // namespace wordsim
