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

#include <certchain/sealer/chain.hpp>

#include <certchain/core/signing.hpp>

namespace certchain {

Block make_genesis_block(const ChainConfig& config) {
    Block genesis;
    genesis.header.number = 0;
    genesis.header.parent_hash = config_digest(config);
    genesis.header.timestamp = config.genesis_timestamp;
    genesis.header.gas_limit = config.block_gas_limit;
    genesis.header.tx_root = compute_tx_root({});
    genesis.header.state_root = commit_state(genesis_state(config));
    return genesis;
}

Chain::Chain(ChainConfig config) : config_{std::move(config)} {
    config_.validate();
    Block genesis = make_genesis_block(config_);
    auto head = std::make_shared<ChainHead>();
    head->header = genesis.header;
    head->hash = hash_block_header(genesis.header);
    head->state = std::make_shared<const WorldState>(genesis_state(config_));
    head_ = std::move(head);
    blocks_.push_back(std::move(genesis));
    receipts_.emplace_back();
}

ChainHeadPtr Chain::head() const {
    std::shared_lock lock{mutex_};
    return head_;
}

std::optional<Block> Chain::block(uint64_t number) const {
    std::shared_lock lock{mutex_};
    if (number >= blocks_.size()) return std::nullopt;
    return blocks_[number];
}

std::vector<Block> Chain::blocks(uint64_t from, uint64_t max) const {
    std::shared_lock lock{mutex_};
    std::vector<Block> out;
    for (uint64_t n = from; n < blocks_.size() && out.size() < max; ++n) out.push_back(blocks_[n]);
    return out;
}

std::vector<Receipt> Chain::receipts(uint64_t number) const {
    std::shared_lock lock{mutex_};
    if (number >= receipts_.size()) return {};
    return receipts_[number];
}

Status Chain::validate_and_append(const Block& block) {
    std::lock_guard writer{writer_};
    ChainHeadPtr parent = head();
    const BlockHeader& h = block.header;

    if (h.number != parent->height() + 1) return reject("height");
    if (h.parent_hash != parent->hash) return reject("parent mismatch");
    if (h.timestamp * 1000 < parent->header.timestamp * 1000 + config_.block_period_ms) return reject("period");
    if (!config_.is_authority(h.sealer)) return reject("not authority");
    if (h.sealer != config_.in_turn_authority(h.number)) return reject("not in turn");

    auto seal = recover_public_key(hash_block_header(h), block.seal);
    if (!seal || derive_address(seal.value()) != h.sealer) return reject("seal");

    if (h.gas_limit != config_.block_gas_limit) return reject("gas_limit");
    if (h.gas_used > h.gas_limit) return reject("gas_used exceeds limit");
    if (compute_tx_root(block.transactions) != h.tx_root) return reject("tx_root mismatch");

    auto state = std::make_shared<WorldState>(*parent->state);
    std::vector<Receipt> receipts;
    receipts.reserve(block.transactions.size());
    uint64_t gas_used = 0;
    Amount fees = 0;
    for (const SignedTransaction& stx : block.transactions) {
        auto receipt = apply_transaction(*state, stx, config_);
        if (!receipt) return reject("invalid transaction: " + receipt.reason());
        gas_used += receipt->gas_used;
        fees += receipt->fee(stx.tx.gas_price);
        receipts.push_back(std::move(receipt).value());
    }
    if (gas_used != h.gas_used) return reject("gas_used mismatch");
    if (commit_state(*state) != h.state_root) return reject("state_root mismatch");

    auto head = std::make_shared<ChainHead>();
    head->header = h;
    head->hash = hash_block_header(h);
    head->state = std::move(state);
    head->total_fees = parent->total_fees + fees;
    {
        std::unique_lock lock{mutex_};
        blocks_.push_back(block);
        receipts_.push_back(std::move(receipts));
        head_ = head;
    }
    for (const Observer& observer : observers_) observer(block, *head);
    return Ok{};
}

void Chain::add_observer(Observer observer) {
    std::lock_guard writer{writer_};
    observers_.push_back(std::move(observer));
}

}  // namespace certchain
