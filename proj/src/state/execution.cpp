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

#include <certchain/state/execution.hpp>

#include <certchain/core/signing.hpp>
#include <certchain/state/registry.hpp>

namespace certchain {

uint64_t gas_cost(const std::optional<CallPayload>& payload, const GasSchedule& schedule) {
    if (!payload) return schedule.transfer;
    if (is_read_only(payload->function)) return 0;
    return schedule.add_certificate;
}

Status check_transaction(const WorldState& state, const SignedTransaction& stx, const ChainConfig& config,
                         bool exact_nonce) {
    const Transaction& tx = stx.tx;

    // condition 1: signed by the owner
    auto signer = recover_signer(stx);
    if (!signer) return reject("signature: " + signer.reason());
    if (signer.value() != tx.from) return reject("signature: signer is not tx.from");

    if (tx.chain_id != config.chain_id) return reject("chain_id");

    AccountState sender = state.account(tx.from);
    if (tx.nonce < sender.nonce) return reject("stale nonce");
    if (exact_nonce && tx.nonce > sender.nonce) return reject("nonce gap");

    // conditions 2 and 3: fee and value are covered
    Amount max_fee = Amount{tx.gas_limit} * tx.gas_price;
    Amount required = max_fee + tx.value;
    if (required < max_fee || sender.balance < required) return reject("insufficient funds");

    if (tx.gas_limit < gas_cost(tx.payload, config.gas)) return reject("intrinsic gas");
    if (tx.payload && is_read_only(tx.payload->function)) return reject("read-only call");
    return Ok{};
}

namespace {

    void move_value(WorldState& state, const Address& from, const Address& to, Amount value) {
        if (value == 0) return;
        state.mutable_account(from).balance -= value;
        state.mutable_account(to).balance += value;
    }

}  // namespace

Result<Receipt> apply_transaction(WorldState& state, const SignedTransaction& stx, const ChainConfig& config) {
    if (auto ok = check_transaction(state, stx, config); !ok) return reject(ok.reason());

    const Transaction& tx = stx.tx;
    Receipt receipt;
    receipt.tx_hash = transaction_hash(stx);
    receipt.gas_used = gas_cost(tx.payload, config.gas);

    AccountState& sender = state.mutable_account(tx.from);
    sender.nonce += 1;
    sender.balance -= receipt.fee(tx.gas_price);

    auto revert = [&](std::string_view reason) {
        receipt.status = ReceiptStatus::kReverted;
        receipt.error_reason = reason;
        return std::move(receipt);
    };

    if (!tx.payload) {
        move_value(state, tx.from, tx.to, tx.value);
        return receipt;
    }

    const CallPayload& call = *tx.payload;
    if (tx.to != config.registry) return revert("no contract");
    if (!call.arity_ok()) return revert("arity");

    // Only addCertificate reaches here; read-only calls were refused above.
    AddOutcome outcome = add_certificate_checked(state, tx.from, record_from_args(call.args));
    if (outcome != AddOutcome::kAdded) return revert(add_outcome_reason(outcome));

    move_value(state, tx.from, tx.to, tx.value);
    receipt.return_value = {0x01};
    return receipt;
}

}  // namespace certchain
