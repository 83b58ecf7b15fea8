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

#include <array>
#include <atomic>
#include <filesystem>
#include <memory>
#include <map>
#include <optional>
#include <string>

#include <certchain/node/api.hpp>
#include <certchain/sealer/block_log.hpp>
#include <certchain/sealer/chain.hpp>
#include <certchain/sealer/mempool.hpp>

namespace certchain {

// Seconds of CPU consumed by this process so far.
double process_cpu_seconds();

// A chain, its mempool and optionally a block log, served through NodeApi.
// Reads evaluate against the head snapshot taken at call start.
class Node final : public NodeApi {
  public:
    struct Options {
        std::optional<std::filesystem::path> datadir;  // block log lives in <datadir>/blocks.log
        size_t mempool_capacity{Mempool::kDefaultCapacity};
    };

    // Replays the block log, if any, through validate_and_append. Throws
    // BlockLogError if a logged block fails validation.
    explicit Node(ChainConfig config, Options options);
    explicit Node(ChainConfig config) : Node(std::move(config), Options{}) {}

    Chain& chain() { return chain_; }
    const Chain& chain() const { return chain_; }
    Mempool& mempool() { return pool_; }

    Result<Hash32> submit_transaction(const std::string& raw) override;
    Result<Hash32> submit(const SignedTransaction& stx);
    PublicCertificate read_certificate(const std::string& cert_no) override;
    uint64_t certificate_count() override;
    std::vector<Block> get_blocks(uint64_t from, uint64_t max) override;
    HeadInfo head() override;
    ChainInfo chain_info() override;
    AccountInfo account(const Address& address) override;
    MetricsSnapshot metrics() override;

  private:
    void count_request(const char* name);

    Chain chain_;
    Mempool pool_;
    std::unique_ptr<BlockLog> log_;
    std::map<std::string, std::unique_ptr<std::atomic<uint64_t>>> counters_;
};

}  // namespace certchain
