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
#include <vector>

#include <certchain/core/secp256k1.hpp>
#include <certchain/loadgen/dataset.hpp>
#include <certchain/node/api.hpp>
#include <certchain/sealer/clock.hpp>

namespace certchain::loadgen {

struct WriteReport {
    uint64_t submitted{0};
    double submit_duration_s{0};
    double confirm_duration_s{0};  // first submission to the poll that saw every record
    uint64_t blocks_used{0};
    std::map<uint64_t, uint64_t> txs_per_block;  // block height -> our transactions in it
    double write_tps{0};                         // submitted / confirm_duration_s

    friend bool operator==(const WriteReport&, const WriteReport&) = default;
};

struct WriteLoadOptions {
    uint64_t gas_price{1'000'000'000};
    uint64_t confirm_timeout_ms{3'600'000};
};

// Signs one addCertificate per record with locally assigned, consecutive
// nonces starting at the account's committed nonce, submits them in order,
// then polls the certificate counter once per block period until it has grown
// by records.size(). Any rejection throws LoadError naming the record index.
WriteReport run_write_load(const std::vector<CertificateRecord>& records, NodeApi& node, const KeyPair& key,
                           Clock& clock, const WriteLoadOptions& options = {});

}  // namespace certchain::loadgen
