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

#include <chrono>
#include <optional>
#include <stop_token>
#include <string>

#include <certchain/common/result.hpp>
#include <certchain/node/api.hpp>
#include <certchain/sealer/chain.hpp>
#include <certchain/sealer/clock.hpp>

namespace certchain {

// Pull-based replication: fetch blocks above the local head from a peer and
// append them through full validation.
class Follower {
  public:
    struct Options {
        uint64_t batch{256};
        uint64_t poll_ms{1000};
        uint64_t max_backoff_ms{30'000};
    };

    Follower(Chain& local, NodeApi& peer, Options options);
    Follower(Chain& local, NodeApi& peer) : Follower(local, peer, Options{}) {}

    // One round: fetch and append until the peer has nothing newer. Returns
    // the number of blocks appended or the validation failure. RpcError
    // propagates.
    Result<uint64_t> sync_once();

    // Loops sync_once every poll interval, backing off exponentially on
    // RpcError. Returns when stopped or on a validation failure, whose reason
    // is kept in failure().
    void run(Clock& clock, std::stop_token stop);

    [[nodiscard]] const std::optional<std::string>& failure() const { return failure_; }

  private:
    Chain& local_;
    NodeApi& peer_;
    Options options_;
    std::optional<std::string> failure_;
};

}  // namespace certchain
