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
#include <optional>
#include <stop_token>
#include <string>

#include <certchain/common/result.hpp>
#include <certchain/core/secp256k1.hpp>
#include <certchain/sealer/chain.hpp>
#include <certchain/sealer/clock.hpp>
#include <certchain/sealer/mempool.hpp>

namespace certchain {

// Produces one block per period when this node's key is in turn. The chain's
// observers see each block after it is appended locally; peers pull it.
class Sealer {
  public:
    // Throws SealError if the key is not an authority of the chain config.
    Sealer(Chain& chain, Mempool& pool, KeyPair key);

    // Earliest wall time at which the next block may be sealed.
    [[nodiscard]] uint64_t next_due_ms() const;

    // Seals and appends one block if now_ms is due and this key is in turn.
    // Returns the new height, nothing if not due or not in turn, or a
    // rejection if the local chain refused the block (state corruption).
    Result<std::optional<uint64_t>> step(uint64_t now_ms);

    // Service loop on wall time. Returns when stopped or on a local append
    // failure, whose reason is kept in halt_reason().
    void run(Clock& clock, std::stop_token stop);

    // Installs the loop as a self-rescheduling task on a simulated clock.
    void attach(SimulatedClock& clock);

    [[nodiscard]] const std::optional<std::string>& halt_reason() const { return halt_reason_; }

  private:
    Chain& chain_;
    Mempool& pool_;
    KeyPair key_;
    std::optional<std::string> halt_reason_;
};

}  // namespace certchain
