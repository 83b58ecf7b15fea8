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

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include <certchain/common/result.hpp>
#include <certchain/core/types.hpp>
#include <certchain/state/config.hpp>
#include <certchain/state/execution.hpp>
#include <certchain/state/world_state.hpp>

namespace certchain {

// Everything a reader needs about one committed height, published as a unit
// so a reader never mixes two heights.
struct ChainHead {
    BlockHeader header;
    Hash32 hash;
    std::shared_ptr<const WorldState> state;
    Amount total_fees{0};  // burned since genesis

    [[nodiscard]] uint64_t height() const { return header.number; }
};

using ChainHeadPtr = std::shared_ptr<const ChainHead>;

// Block 0: parent_hash = config_digest, no transactions, zero seal.
Block make_genesis_block(const ChainConfig& config);

// Append-only chain with a replayed head state. One writer (the sealer or
// the follower) calls validate_and_append; any number of readers call the
// const accessors concurrently.
class Chain {
  public:
    using Observer = std::function<void(const Block&, const ChainHead&)>;

    // Throws ConfigError for an invalid config.
    explicit Chain(ChainConfig config);

    Chain(const Chain&) = delete;
    Chain& operator=(const Chain&) = delete;

    [[nodiscard]] const ChainConfig& config() const { return config_; }
    [[nodiscard]] ChainHeadPtr head() const;
    [[nodiscard]] uint64_t height() const { return head()->height(); }

    [[nodiscard]] std::optional<Block> block(uint64_t number) const;
    // Up to `max` consecutive blocks starting at `from`; empty past the head.
    [[nodiscard]] std::vector<Block> blocks(uint64_t from, uint64_t max) const;
    [[nodiscard]] std::vector<Receipt> receipts(uint64_t number) const;

    // Checks linkage, period, in-turn seal, gas bound, then re-executes the
    // transactions and compares gas_used, tx_root and state_root. Appends and
    // advances the head only if everything matches; on rejection the chain
    // is unchanged.
    Status validate_and_append(const Block& block);

    // Called on the writer thread after each append, outside the lock.
    void add_observer(Observer observer);

  private:
    ChainConfig config_;
    mutable std::shared_mutex mutex_;
    std::vector<Block> blocks_;
    std::vector<std::vector<Receipt>> receipts_;
    ChainHeadPtr head_;
    std::mutex writer_;
    std::vector<Observer> observers_;
};

}  // namespace certchain
