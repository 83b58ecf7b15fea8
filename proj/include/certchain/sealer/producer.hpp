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

#include <stdexcept>
#include <vector>

#include <certchain/core/secp256k1.hpp>
#include <certchain/core/types.hpp>
#include <certchain/sealer/mempool.hpp>
#include <certchain/state/config.hpp>
#include <certchain/state/execution.hpp>
#include <certchain/state/world_state.hpp>

namespace certchain {

class SealError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AssembledBlock {
    Block block;  // unsealed
    std::vector<Receipt> receipts;
    // Pending transactions that no longer pass validity against the working
    // state; the caller should evict them.
    std::vector<Hash32> rejected;
};

// Drains the pool greedily in arrival order across senders and nonce order
// within a sender, stopping at the first transaction whose gas cost does not
// fit. Reverted transactions are included. The header sealer is the in-turn
// authority for the new height. Throws std::invalid_argument if
// now_s * 1000 < parent.timestamp * 1000 + block_period_ms.
AssembledBlock assemble_block(const Mempool& pool, const BlockHeader& parent, const WorldState& state,
                              const ChainConfig& config, uint64_t now_s);

// Signs hash_block_header(header). Throws SealError unless the key belongs to
// the header's sealer and that sealer is the in-turn authority.
Block seal_block(Block block, const KeyPair& key, const ChainConfig& config);

}  // namespace certchain
