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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <certchain/common/result.hpp>
#include <certchain/core/types.hpp>
#include <certchain/state/registry.hpp>

namespace certchain {

// Transport failure talking to a remote node (connection refused, timeout,
// unexpected HTTP status or body). Never used for a node-side rejection.
class RpcError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct HeadInfo {
    uint64_t height{0};
    Hash32 hash;
    Hash32 state_root;

    friend bool operator==(const HeadInfo&, const HeadInfo&) = default;
};

// Parameters a client needs to build valid transactions.
struct ChainInfo {
    uint64_t chain_id{0};
    uint64_t block_period_ms{0};
    uint64_t block_gas_limit{0};
    Address registry;
    Address registrar;
    uint64_t gas_transfer{0};
    uint64_t gas_add_certificate{0};

    friend bool operator==(const ChainInfo&, const ChainInfo&) = default;
};

struct AccountInfo {
    Amount balance{0};
    uint64_t nonce{0};
};

struct MetricsSnapshot {
    double process_cpu_seconds{0};
    std::map<std::string, uint64_t> requests_total;  // keyed by method name
    uint64_t txs_pending{0};
    uint64_t chain_height{0};
    uint64_t certs_total{0};
};

// Method names used as requests_total keys.
namespace method {
    inline constexpr const char* kSubmit = "submit";
    inline constexpr const char* kRead = "read";
    inline constexpr const char* kCount = "cert_count";
    inline constexpr const char* kBlocks = "blocks";
    inline constexpr const char* kHead = "head";
    inline constexpr const char* kChain = "chain";
    inline constexpr const char* kAccount = "account";
    inline constexpr const char* kMetrics = "metrics";
}  // namespace method

// What a node offers its clients. Implemented in process by Node and over
// HTTP by HttpNodeClient, so tools and tests run against either.
class NodeApi {
  public:
    virtual ~NodeApi() = default;

    // `raw` is the 0x-prefixed hex of an encoded signed transaction. Malformed
    // input is rejected with a reason starting "parse error"; mempool
    // rejections are passed through verbatim.
    virtual Result<Hash32> submit_transaction(const std::string& raw) = 0;
    virtual PublicCertificate read_certificate(const std::string& cert_no) = 0;
    virtual uint64_t certificate_count() = 0;
    virtual std::vector<Block> get_blocks(uint64_t from, uint64_t max) = 0;
    virtual HeadInfo head() = 0;
    virtual ChainInfo chain_info() = 0;
    virtual AccountInfo account(const Address& address) = 0;
    virtual MetricsSnapshot metrics() = 0;
};

}  // namespace certchain
