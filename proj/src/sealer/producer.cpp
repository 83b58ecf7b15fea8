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

#include <certchain/sealer/producer.hpp>

#include <queue>

#include <certchain/core/signing.hpp>

namespace certchain {

namespace {

    struct Cursor {
        const std::vector<PendingTxPtr>* queue;
        size_t index;

        [[nodiscard]] const PendingTx& current() const { return *(*queue)[index]; }
    };

    struct LaterArrival {
        bool operator()(const Cursor& a, const Cursor& b) const { return a.current().arrival > b.current().arrival; }
    };

}  // namespace

AssembledBlock assemble_block(const Mempool& pool, const BlockHeader& parent, const WorldState& state,
                              const ChainConfig& config, uint64_t now_s) {
    if (now_s * 1000 < parent.timestamp * 1000 + config.block_period_ms) {
        throw std::invalid_argument{"assemble_block: period has not elapsed"};
    }
    const std::vector<std::vector<PendingTxPtr>> queues = pool.snapshot();
    WorldState working = state;

    // A sender is eligible while its lowest remaining nonce is exactly the
    // account's next nonce; stale entries are skipped, gapped ones wait.
    std::priority_queue<Cursor, std::vector<Cursor>, LaterArrival> ready;
    auto enqueue = [&](Cursor cursor) {
        while (cursor.index < cursor.queue->size()) {
            const Transaction& tx = cursor.current().stx.tx;
            uint64_t next = working.account(tx.from).nonce;
            if (tx.nonce < next) {
                ++cursor.index;
                continue;
            }
            if (tx.nonce == next) ready.push(cursor);
            return;
        }
    };
    for (const auto& queue : queues) enqueue(Cursor{&queue, 0});

    AssembledBlock out;
    BlockHeader& header = out.block.header;
    uint64_t gas_used = 0;
    while (!ready.empty()) {
        Cursor cursor = ready.top();
        const PendingTx& pending = cursor.current();
        uint64_t cost = gas_cost(pending.stx.tx.payload, config.gas);
        if (cost > config.block_gas_limit - gas_used) break;
        ready.pop();

        auto receipt = apply_transaction(working, pending.stx, config);
        if (!receipt) {
            // Later nonces of this sender cannot apply either.
            out.rejected.push_back(pending.hash);
            continue;
        }
        gas_used += receipt->gas_used;
        out.block.transactions.push_back(pending.stx);
        out.receipts.push_back(std::move(receipt).value());
        ++cursor.index;
        enqueue(cursor);
    }

    header.number = parent.number + 1;
    header.parent_hash = hash_block_header(parent);
    header.timestamp = now_s;
    header.sealer = config.in_turn_authority(header.number);
    header.gas_limit = config.block_gas_limit;
    header.gas_used = gas_used;
    header.tx_root = compute_tx_root(out.block.transactions);
    header.state_root = commit_state(working);
    return out;
}

Block seal_block(Block block, const KeyPair& key, const ChainConfig& config) {
    const Address signer = key.address();
    if (!config.is_authority(signer)) throw SealError{"seal_block: key is not an authority"};
    if (signer != config.in_turn_authority(block.header.number)) throw SealError{"seal_block: not in turn"};
    if (signer != block.header.sealer) throw SealError{"seal_block: header names a different sealer"};
    block.seal = key.sign_digest(hash_block_header(block.header));
    return block;
}

}  // namespace certchain
