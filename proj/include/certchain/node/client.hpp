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

#include <chrono>
#include <memory>
#include <string>

#include <certchain/node/api.hpp>

namespace httplib {
class Client;
}

namespace certchain {

// NodeApi over HTTP. One keep-alive connection; not safe for concurrent use,
// so give each thread its own client.
class HttpNodeClient final : public NodeApi {
  public:
    // `base_url` like "http://127.0.0.1:8545".
    explicit HttpNodeClient(const std::string& base_url,
                            std::chrono::milliseconds timeout = std::chrono::seconds{10});
    ~HttpNodeClient() override;

    Result<Hash32> submit_transaction(const std::string& raw) override;
    PublicCertificate read_certificate(const std::string& cert_no) override;
    uint64_t certificate_count() override;
    std::vector<Block> get_blocks(uint64_t from, uint64_t max) override;
    HeadInfo head() override;
    ChainInfo chain_info() override;
    AccountInfo account(const Address& address) override;
    MetricsSnapshot metrics() override;

  private:
    std::string get(const std::string& path);

    std::string base_url_;
    std::unique_ptr<httplib::Client> client_;
};

}  // namespace certchain
