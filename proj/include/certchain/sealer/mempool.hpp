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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include <certchain/common/result.hpp>
#include <certchain/core/types.hpp>
#include <certchain/state/world_state.hpp>

namespace certchain {

struct PendingTx {
    SignedTransaction stx;
    Hash32 hash;
    uint64_t arrival{0};  // admission sequence number
};

using PendingTxPtr = std::shared_ptr<const PendingTx>;

// Validated, not-yet-included transactions. Safe for many concurrent
// submitters and one consumer; admission is serialized by one mutex so a
// (sender, nonce) slot is decided exactly once.
class Mempool {
  public:
    static constexpr size_t kDefaultCapacity = 100'000;

    explicit Mempool(size_t capacity = kDefaultCapacity) : capacity_{capacity} {}

    // Runs the transaction validity checks against `state` (future nonces
    // allowed). Resubmitting an already pending transaction returns its hash
    // again. Rejection reasons: those of check_transaction, "nonce already
    // pending", "capacity".
    Result<Hash32> submit(const SignedTransaction& stx, const WorldState& state, const ChainConfig& config);

    // Per-sender queues sorted by nonce, senders in no particular order.
    [[nodiscard]] std::vector<std::vector<PendingTxPtr>> snapshot() const;

    // Drops everything whose nonce the state has already consumed.
    void prune(const WorldState& state);
    void remove(const std::vector<Hash32>& hashes);

    [[nodiscard]] size_t size() const;
    [[nodiscard]] bool contains(const Hash32& hash) const;

  private:
    void erase_locked(const Hash32& hash);

    size_t capacity_;
    mutable std::mutex mutex_;
    uint64_t next_arrival_{0};
    std::unordered_map<Hash32, PendingTxPtr> by_hash_;
    std::map<Address, std::map<uint64_t, PendingTxPtr>> by_sender_;
};

}  // namespace certchain
