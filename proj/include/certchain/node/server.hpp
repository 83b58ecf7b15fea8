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

#pragma once

#include <memory>
#include <string>
#include <thread>

#include <certchain/node/api.hpp>

namespace httplib {
class Server;
}

namespace certchain {

// HTTP/JSON front end for a NodeApi.
//
//   POST /tx              {"raw": "0x.."}      -> {"hash": "0x.."}
//   GET  /cert/{certNo}                        -> {"certNo","name","programme","convoDate"}
//   GET  /cert-count                           -> {"count": n}
//   GET  /blocks?from=N&max=M                  -> {"blocks": ["0x..", ..]}
//   GET  /head                                 -> {"height", "hash", "stateRoot"}
//   GET  /chain                                -> chain id, period, registry, gas schedule
//   GET  /account/{address}                    -> {"balance": "<decimal>", "nonce": n}
//   GET  /metrics                              -> MetricsSnapshot
//
// Failures answer {"error": {"code", "message"}}: 400 for malformed input,
// 422 for a transaction the node refused, 404 for unknown paths.
class RpcServer {
  public:
    static constexpr int kParseError = 1;
    static constexpr int kRejected = 2;
    static constexpr int kNotFound = 3;
    static constexpr int kBadParameter = 4;
    static constexpr int kInternal = 5;

    explicit RpcServer(NodeApi& node, size_t worker_threads = 32);
    ~RpcServer();

    RpcServer(const RpcServer&) = delete;
    RpcServer& operator=(const RpcServer&) = delete;

    // Binds and serves on a background thread; port 0 picks a free port.
    // Returns the bound port. Throws RpcError if binding fails.
    int start(const std::string& host, int port);
    void stop();

    [[nodiscard]] int port() const { return port_; }

  private:
    NodeApi& node_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_{0};
};

}  // namespace certchain
