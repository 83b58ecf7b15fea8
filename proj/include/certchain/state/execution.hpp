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

#include <optional>
#include <string>

#include <certchain/common/result.hpp>
#include <certchain/core/types.hpp>
#include <certchain/state/world_state.hpp>

namespace certchain {

enum class ReceiptStatus : uint8_t {
    kSuccess = 1,
    kReverted = 0,
};

struct Receipt {
    Hash32 tx_hash;
    ReceiptStatus status{ReceiptStatus::kSuccess};
    uint64_t gas_used{0};
    Bytes return_value;        // addCertificate success: {0x01}; empty when reverted
    std::string error_reason;  // empty on success

    [[nodiscard]] bool success() const { return status == ReceiptStatus::kSuccess; }
    // Fee actually burned by this transaction.
    [[nodiscard]] Amount fee(uint64_t gas_price) const { return Amount{gas_used} * gas_price; }

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

// Transfers cost schedule.transfer, addCertificate schedule.add_certificate.
// Read-only functions cost nothing: they are served from snapshots and never
// enter blocks.
uint64_t gas_cost(const std::optional<CallPayload>& payload, const GasSchedule& schedule);

// Transaction-level validity, in order: signature recovers to tx.from,
// chain_id, nonce, balance covers gas_limit * gas_price + value, gas_limit
// covers gas_cost, payload is not a read-only call. With `exact_nonce` false
// a nonce above the account's is admitted (mempool future set).
Status check_transaction(const WorldState& state, const SignedTransaction& stx, const ChainConfig& config,
                         bool exact_nonce = true);

// Validates and executes one transaction against `state` in place.
// Rejection (returned as Rejection) leaves the state untouched and the
// transaction must not enter a block. Otherwise the nonce is bumped and
// gas_cost * gas_price is burned; a payload failure yields a reverted
// receipt with no further state change.
Result<Receipt> apply_transaction(WorldState& state, const SignedTransaction& stx, const ChainConfig& config);

}  // namespace certchain
