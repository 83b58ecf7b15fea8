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

#include <certchain/common/bytes.hpp>
#include <certchain/core/types.hpp>

namespace certchain {

class EncodingError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Bit-exact transaction layout:
//   u64 chain_id | u64 nonce | from[20] | to[20] | u128 value | u64 gas_limit
//   | u64 gas_price | u8 tag (0 transfer, 1 call)
//   [call: u8 function_code | u16 arg_count | (u32 len | utf8)*]
// All integers big-endian. Throws EncodingError when the call arity is wrong.
Bytes encode_transaction(const Transaction& tx);

// Decodes one transaction and requires the whole input to be consumed.
// Arity is not checked here: a well-formed call with the wrong argument count
// decodes and later reverts on execution. Throws DecodingError.
Transaction decode_transaction(ByteView data);

// Transaction layout followed by r[32] | s[32] | u8 recovery_id.
Bytes encode_signed_transaction(const SignedTransaction& stx);
SignedTransaction decode_signed_transaction(ByteView data);

// u64 number | parent_hash | u64 timestamp | sealer[20] | u64 gas_limit
// | u64 gas_used | tx_root | state_root
Bytes encode_header(const BlockHeader& header);
BlockHeader decode_header(ByteView data);

// header | u32 tx_count | (u32 len | signed tx)* | seal r[32] s[32] u8 v
Bytes encode_block(const Block& block);
Block decode_block(ByteView data);

namespace detail {
    void write_transaction(Writer& w, const Transaction& tx);
    Transaction read_transaction(Reader& r);
}  // namespace detail

}  // namespace certchain
