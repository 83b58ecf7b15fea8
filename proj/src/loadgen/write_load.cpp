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

#include <certchain/loadgen/write_load.hpp>

#include <set>

#include <certchain/core/encoding.hpp>
#include <certchain/core/signing.hpp>
#include <certchain/state/registry.hpp>

namespace certchain::loadgen {

WriteReport run_write_load(const std::vector<CertificateRecord>& records, NodeApi& node, const KeyPair& key,
                           Clock& clock, const WriteLoadOptions& options) {
    const ChainInfo chain = node.chain_info();
    const uint64_t first_nonce = node.account(key.address()).nonce;
    const uint64_t start_height = node.head().height;
    const uint64_t baseline = node.certificate_count();

    std::set<Hash32> ours;
    const uint64_t started_ms = clock.now_ms();
    for (size_t i = 0; i < records.size(); ++i) {
        Transaction tx;
        tx.chain_id = chain.chain_id;
        tx.nonce = first_nonce + i;
        tx.from = key.address();
        tx.to = chain.registry;
        tx.gas_limit = chain.gas_add_certificate;
        tx.gas_price = options.gas_price;
        tx.payload = CallPayload{Function::kAddCertificate, record_to_args(records[i])};
        SignedTransaction stx = sign_transaction(tx, key);
        auto hash = node.submit_transaction(to_hex(encode_signed_transaction(stx)));
        if (!hash) {
            throw LoadError{"record " + std::to_string(i) + " (" + records[i].cert_no + ") rejected: " + hash.reason()};
        }
        ours.insert(hash.value());
    }
    const uint64_t submitted_ms = clock.now_ms();

    const uint64_t target = baseline + records.size();
    uint64_t poll_ms = started_ms;
    while (node.certificate_count() < target) {
        poll_ms += chain.block_period_ms;
        if (poll_ms - started_ms > options.confirm_timeout_ms) {
            throw LoadError{"timed out waiting for confirmation at count " + std::to_string(node.certificate_count())};
        }
        if (poll_ms > clock.now_ms()) clock.sleep_until(poll_ms, {});
    }
    const uint64_t confirmed_ms = std::max(clock.now_ms(), submitted_ms);

    WriteReport report;
    report.submitted = records.size();
    report.submit_duration_s = static_cast<double>(submitted_ms - started_ms) / 1000.0;
    report.confirm_duration_s = static_cast<double>(confirmed_ms - started_ms) / 1000.0;

    uint64_t found = 0;
    const uint64_t end_height = node.head().height;
    for (uint64_t from = start_height + 1; from <= end_height && found < ours.size();) {
        std::vector<Block> blocks = node.get_blocks(from, 256);
        if (blocks.empty()) break;
        for (const Block& block : blocks) {
            for (const SignedTransaction& stx : block.transactions) {
                if (ours.count(transaction_hash(stx)) != 0) {
                    ++report.txs_per_block[block.header.number];
                    ++found;
                }
            }
        }
        from = blocks.back().header.number + 1;
    }
    report.blocks_used = report.txs_per_block.size();
    report.write_tps =
        report.confirm_duration_s > 0 ? static_cast<double>(report.submitted) / report.confirm_duration_s : 0.0;
    return report;
}

}  // namespace certchain::loadgen
