#pragma once

#include "wordsim/protocol.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wordsim {

// Framed-JSON TCP front end. One thread per connection.
class TcpServer {
public:
    // Binds immediately; port 0 picks a free port (see port()).
    TcpServer(Dispatcher& dispatcher, const std::string& host, int port);
    ~TcpServer();
    TcpServer(const TcpServer&) = delete;
    TcpServer& operator=(const TcpServer&) = delete;

    [[nodiscard]] int port() const noexcept { return port_; }

    // Accept loop; returns after stop().
    void run();
    void stop();

private:
    void serve_connection(int fd);

    Dispatcher& dispatcher_;
    int listen_fd_ = -1;
    int port_ = 0;
    std::atomic<bool> stopping_{false};
    std::mutex connections_mutex_;
    std::vector<int> open_fds_;
    std::vector<std::thread> connections_;
};

// The same requests as POST bodies to /api, for browser clients.
class HttpFrontend {
public:
    explicit HttpFrontend(Dispatcher& dispatcher);
    ~HttpFrontend();
    HttpFrontend(const HttpFrontend&) = delete;
    HttpFrontend& operator=(const HttpFrontend&) = delete;

    // Binds; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    // Blocks serving requests until stop().
    bool run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace wordsim
