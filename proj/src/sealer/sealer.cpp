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

#include <certchain/sealer/sealer.hpp>

#include <algorithm>

#include <certchain/sealer/producer.hpp>

namespace certchain {

Sealer::Sealer(Chain& chain, Mempool& pool, KeyPair key) : chain_{chain}, pool_{pool}, key_{std::move(key)} {
    if (!chain_.config().is_authority(key_.address())) throw SealError{"sealer key is not an authority"};
}

uint64_t Sealer::next_due_ms() const {
    return chain_.head()->header.timestamp * 1000 + chain_.config().block_period_ms;
}

Result<std::optional<uint64_t>> Sealer::step(uint64_t now_ms) {
    if (halt_reason_) return reject(*halt_reason_);
    ChainHeadPtr head = chain_.head();
    const ChainConfig& config = chain_.config();
    if (now_ms < head->header.timestamp * 1000 + config.block_period_ms) return std::optional<uint64_t>{};
    if (config.in_turn_authority(head->height() + 1) != key_.address()) return std::optional<uint64_t>{};

    AssembledBlock assembled = assemble_block(pool_, head->header, *head->state, config, now_ms / 1000);
    Block block = seal_block(std::move(assembled.block), key_, config);
    if (auto appended = chain_.validate_and_append(block); !appended) {
        halt_reason_ = "local block rejected: " + appended.reason();
        return reject(*halt_reason_);
    }
    pool_.remove(assembled.rejected);
    pool_.prune(*chain_.head()->state);
    return std::optional<uint64_t>{block.header.number};
}

void Sealer::run(Clock& clock, std::stop_token stop) {
    // Out of turn, re-check at a tenth of the period for a peer's block.
    const uint64_t poll_ms = std::max<uint64_t>(chain_.config().block_period_ms / 10, 1);
    while (!stop.stop_requested()) {
        uint64_t due = next_due_ms();
        if (clock.now_ms() < due && !clock.sleep_until(due, stop)) return;
        auto stepped = step(clock.now_ms());
        if (!stepped) return;
        if (!stepped.value() && !clock.sleep_until(clock.now_ms() + poll_ms, stop)) return;
    }
}

void Sealer::attach(SimulatedClock& clock) {
    clock.schedule(next_due_ms(), [this, &clock] {
        auto stepped = step(clock.now_ms());
        if (!stepped) return;
        if (stepped.value()) {
            attach(clock);
        } else {
            clock.schedule(clock.now_ms() + std::max<uint64_t>(chain_.config().block_period_ms / 10, 1),
                           [this, &clock] { attach(clock); });
        }
    });
}

}  // namespace certchain
