/*
   Copyright 2026 The Certchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <certchain/node/server.hpp>

#include <charconv>

#include <httplib.h>

#include "json_codec.hpp"

namespace certchain {

namespace {

    using wire::Json;

    void reply(httplib::Response& res, const Json& body, int status = 200) {
        res.status = status;
        res.set_content(body.dump(), "application/json");
    }

    void fail(httplib::Response& res, int status, int code, const std::string& message) {
        reply(res, wire::error_to_json(code, message), status);
    }

    bool parse_u64(const std::string& text, uint64_t& out) {
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
        return ec == std::errc{} && end == text.data() + text.size() && !text.empty();
    }

}  // namespace

RpcServer::RpcServer(NodeApi& node, size_t worker_threads)
    : node_{node}, server_{std::make_unique<httplib::Server>()} {
    httplib::Server& s = *server_;
    s.new_task_queue = [worker_threads] { return new httplib::ThreadPool(worker_threads); };
    s.set_tcp_nodelay(true);
    s.set_keep_alive_max_count(1'000'000);
    s.set_keep_alive_timeout(5);

    s.Post("/tx", [this](const httplib::Request& req, httplib::Response& res) {
        std::string raw;
        try {
            raw = Json::parse(req.body).at("raw").get<std::string>();
        } catch (const std::exception& e) {
            return fail(res, 400, kParseError, std::string{"parse error: "} + e.what());
        }
        auto hash = node_.submit_transaction(raw);
        if (!hash) {
            bool parse = hash.reason().rfind("parse error", 0) == 0;
            return fail(res, parse ? 400 : 422, parse ? kParseError : kRejected, hash.reason());
        }
        reply(res, Json{{"hash", hash->hex()}});
    });

    s.Get(R"(/cert/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
        reply(res, wire::certificate_to_json(node_.read_certificate(req.matches[1].str())));
    });

    s.Get("/cert-count", [this](const httplib::Request&, httplib::Response& res) {
        reply(res, Json{{"count", node_.certificate_count()}});
    });

    s.Get("/blocks", [this](const httplib::Request& req, httplib::Response& res) {
        uint64_t from = 0;
        uint64_t max = 0;
        if (!parse_u64(req.get_param_value("from"), from) || !parse_u64(req.get_param_value("max"), max)) {
            return fail(res, 400, kBadParameter, "from and max must be non-negative integers");
        }
        reply(res, wire::blocks_to_json(node_.get_blocks(from, max)));
    });

    s.Get("/head", [this](const httplib::Request&, httplib::Response& res) {
        reply(res, wire::head_to_json(node_.head()));
    });

    s.Get("/chain", [this](const httplib::Request&, httplib::Response& res) {
        reply(res, wire::chain_to_json(node_.chain_info()));
    });

    s.Get(R"(/account/(0x[0-9a-fA-F]{40}))", [this](const httplib::Request& req, httplib::Response& res) {
        reply(res, wire::account_to_json(node_.account(Address::from_hex(req.matches[1].str()))));
    });

    s.Get("/metrics", [this](const httplib::Request&, httplib::Response& res) {
        reply(res, wire::metrics_to_json(node_.metrics()));
    });

    s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.status == 404 && res.body.empty()) fail(res, 404, kNotFound, "not found");
    });

    s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            fail(res, 500, kInternal, e.what());
        } catch (...) {
            fail(res, 500, kInternal, "unknown error");
        }
    });
}

RpcServer::~RpcServer() { stop(); }

int RpcServer::start(const std::string& host, int port) {
    int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw RpcError{"cannot bind " + host + ":" + std::to_string(port)};
    port_ = bound;
    thread_ = std::thread{[this] { server_->listen_after_bind(); }};
    server_->wait_until_ready();
    return port_;
}

void RpcServer::stop() {
    if (!thread_.joinable()) return;
    server_->stop();
    thread_.join();
}

}  // namespace certchain
