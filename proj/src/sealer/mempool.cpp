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

#include <certchain/sealer/mempool.hpp>

#include <certchain/core/signing.hpp>
#include <certchain/state/execution.hpp>

namespace certchain {

Result<Hash32> Mempool::submit(const SignedTransaction& stx, const WorldState& state, const ChainConfig& config) {
    Hash32 hash = transaction_hash(stx);
    {
        std::lock_guard lock{mutex_};
        if (by_hash_.count(hash) != 0) return hash;
    }

    // Signature recovery dominates; do it outside the lock.
    if (auto ok = check_transaction(state, stx, config, /*exact_nonce=*/false); !ok) return reject(ok.reason());

    std::lock_guard lock{mutex_};
    if (by_hash_.count(hash) != 0) return hash;
    auto& queue = by_sender_[stx.tx.from];
    if (queue.count(stx.tx.nonce) != 0) return reject("nonce already pending");
    if (by_hash_.size() >= capacity_) {
        if (queue.empty()) by_sender_.erase(stx.tx.from);
        return reject("capacity");
    }
    auto entry = std::make_shared<const PendingTx>(PendingTx{stx, hash, next_arrival_++});
    queue.emplace(stx.tx.nonce, entry);
    by_hash_.emplace(hash, std::move(entry));
    return hash;
}

std::vector<std::vector<PendingTxPtr>> Mempool::snapshot() const {
    std::lock_guard lock{mutex_};
    std::vector<std::vector<PendingTxPtr>> out;
    out.reserve(by_sender_.size());
    for (const auto& [sender, queue] : by_sender_) {
        std::vector<PendingTxPtr>& txs = out.emplace_back();
        txs.reserve(queue.size());
        for (const auto& [nonce, entry] : queue) txs.push_back(entry);
    }
    return out;
}

void Mempool::prune(const WorldState& state) {
    std::lock_guard lock{mutex_};
    for (auto it = by_sender_.begin(); it != by_sender_.end();) {
        uint64_t next = state.account(it->first).nonce;
        auto& queue = it->second;
        while (!queue.empty() && queue.begin()->first < next) {
            by_hash_.erase(queue.begin()->second->hash);
            queue.erase(queue.begin());
        }
        it = queue.empty() ? by_sender_.erase(it) : std::next(it);
    }
}

void Mempool::remove(const std::vector<Hash32>& hashes) {
    std::lock_guard lock{mutex_};
    for (const Hash32& h : hashes) erase_locked(h);
}

void Mempool::erase_locked(const Hash32& hash) {
    auto it = by_hash_.find(hash);
    if (it == by_hash_.end()) return;
    const Transaction& tx = it->second->stx.tx;
    auto sender = by_sender_.find(tx.from);
    if (sender != by_sender_.end()) {
        sender->second.erase(tx.nonce);
        if (sender->second.empty()) by_sender_.erase(sender);
    }
    by_hash_.erase(it);
}

size_t Mempool::size() const {
    std::lock_guard lock{mutex_};
    return by_hash_.size();
}

bool Mempool::contains(const Hash32& hash) const {
    std::lock_guard lock{mutex_};
    return by_hash_.count(hash) != 0;
}

}  // namespace certchain
