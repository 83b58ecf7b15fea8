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
#include <string>
#include <string_view>
#include <vector>

#include <certchain/common/amount.hpp>
#include <certchain/core/keccak.hpp>
#include <certchain/core/secp256k1.hpp>

namespace certchain {

// Registry entry points. Numeric values are the wire function codes.
enum class Function : uint8_t {
    kAddCertificate = 1,
    kReadCertificatePublic = 2,
    kIsValidCertificate = 3,
    kGetListCertificateStatus = 4,
};

std::string_view function_name(Function f);
std::optional<Function> function_from_name(std::string_view name);
std::optional<Function> function_from_code(uint8_t code);
size_t expected_arity(Function f);
bool is_read_only(Function f);

struct CallPayload {
    Function function{Function::kAddCertificate};
    std::vector<std::string> args;

    [[nodiscard]] bool arity_ok() const { return args.size() == expected_arity(function); }

    friend bool operator==(const CallPayload&, const CallPayload&) = default;
};

struct Transaction {
    uint64_t chain_id{0};
    uint64_t nonce{0};
    Address from;
    Address to;
    Amount value{0};
    uint64_t gas_limit{0};
    uint64_t gas_price{0};
    std::optional<CallPayload> payload;  // empty = plain transfer

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct SignedTransaction {
    Transaction tx;
    Signature signature;

    friend bool operator==(const SignedTransaction&, const SignedTransaction&) = default;
};

struct BlockHeader {
    uint64_t number{0};
    Hash32 parent_hash;
    uint64_t timestamp{0};  // seconds
    Address sealer;
    uint64_t gas_limit{0};
    uint64_t gas_used{0};
    Hash32 tx_root;
    Hash32 state_root;

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct Block {
    BlockHeader header;
    std::vector<SignedTransaction> transactions;
    Signature seal;  // all-zero for genesis

    friend bool operator==(const Block&, const Block&) = default;
};

}  // namespace certchain
