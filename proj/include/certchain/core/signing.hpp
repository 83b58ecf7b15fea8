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

#include <span>

#include <certchain/common/result.hpp>
#include <certchain/core/types.hpp>

namespace certchain {

// Digest a sender signs: keccak256 of the transaction layout (chain_id included).
Hash32 signing_digest(const Transaction& tx);

// Throws std::invalid_argument if tx.from is not the key's address, and
// EncodingError on a payload arity violation.
SignedTransaction sign_transaction(const Transaction& tx, const KeyPair& key);

// Address recovered from the signature over signing_digest(tx). Does not
// compare with tx.from; callers decide what a mismatch means.
Result<Address> recover_signer(const SignedTransaction& stx);

// keccak256 of the full signed encoding. Unique per transaction because
// signatures are low-s.
Hash32 transaction_hash(const SignedTransaction& stx);

// keccak256 of the concatenated transaction hashes, in block order.
Hash32 compute_tx_root(std::span<const SignedTransaction> txs);

// The seal is not part of the preimage.
Hash32 hash_block_header(const BlockHeader& header);

}  // namespace certchain
