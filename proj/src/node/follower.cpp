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

#include <certchain/node/follower.hpp>

#include <algorithm>

namespace certchain {

Follower::Follower(Chain& local, NodeApi& peer, Options options) : local_{local}, peer_{peer}, options_{options} {}

Result<uint64_t> Follower::sync_once() {
    uint64_t appended = 0;
    while (true) {
        std::vector<Block> blocks = peer_.get_blocks(local_.height() + 1, options_.batch);
        if (blocks.empty()) return appended;
        for (const Block& block : blocks) {
            if (auto ok = local_.validate_and_append(block); !ok) {
                return reject("block " + std::to_string(block.header.number) + ": " + ok.reason());
            }
            ++appended;
        }
    }
}

void Follower::run(Clock& clock, std::stop_token stop) {
    uint64_t backoff_ms = options_.poll_ms;
    while (!stop.stop_requested()) {
        uint64_t wait_ms = options_.poll_ms;
        try {
            auto synced = sync_once();
            if (!synced) {
                failure_ = synced.reason();
                return;
            }
            backoff_ms = options_.poll_ms;
        } catch (const RpcError&) {
            backoff_ms = std::min(backoff_ms * 2, options_.max_backoff_ms);
            wait_ms = backoff_ms;
        }
        if (!clock.sleep_until(clock.now_ms() + wait_ms, stop)) return;
    }
}

}  // namespace certchain
