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

#include <certchain/node/node.hpp>

#include <ctime>

#include <certchain/core/encoding.hpp>
#include <certchain/core/signing.hpp>

namespace certchain {

double process_cpu_seconds() {
    timespec ts{};
    ::clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

Node::Node(ChainConfig config, Options options) : chain_{std::move(config)}, pool_{options.mempool_capacity} {
    for (const char* m : {method::kSubmit, method::kRead, method::kCount, method::kBlocks, method::kHead,
                          method::kChain, method::kAccount, method::kMetrics}) {
        counters_.emplace(m, std::make_unique<std::atomic<uint64_t>>(0));
    }
    if (!options.datadir) return;

    std::filesystem::create_directories(*options.datadir);
    log_ = std::make_unique<BlockLog>(*options.datadir / "blocks.log");
    for (const Block& block : log_->recovered()) {
        if (auto appended = chain_.validate_and_append(block); !appended) {
            throw BlockLogError{"block log replay failed at height " + std::to_string(block.header.number) + ": " +
                                appended.reason()};
        }
    }
    chain_.add_observer([log = log_.get()](const Block& block, const ChainHead&) { log->append(block); });
}

void Node::count_request(const char* name) {
    // The map is fixed after construction, so lookups need no lock.
    counters_.at(name)->fetch_add(1, std::memory_order_relaxed);
}

Result<Hash32> Node::submit_transaction(const std::string& raw) {
    count_request(method::kSubmit);
    SignedTransaction stx;
    try {
        stx = decode_signed_transaction(from_hex(raw));
    } catch (const DecodingError& e) {
        return reject(std::string{"parse error: "} + e.what());
    }
    ChainHeadPtr head = chain_.head();
    return pool_.submit(stx, *head->state, chain_.config());
}

Result<Hash32> Node::submit(const SignedTransaction& stx) {
    count_request(method::kSubmit);
    ChainHeadPtr head = chain_.head();
    return pool_.submit(stx, *head->state, chain_.config());
}

PublicCertificate Node::read_certificate(const std::string& cert_no) {
    count_request(method::kRead);
    ChainHeadPtr head = chain_.head();
    return read_certificate_public(*head->state, cert_no);
}

uint64_t Node::certificate_count() {
    count_request(method::kCount);
    return get_list_certificate_status(*chain_.head()->state);
}

std::vector<Block> Node::get_blocks(uint64_t from, uint64_t max) {
    count_request(method::kBlocks);
    return chain_.blocks(from, max);
}

HeadInfo Node::head() {
    count_request(method::kHead);
    ChainHeadPtr head = chain_.head();
    return HeadInfo{head->height(), head->hash, head->header.state_root};
}

ChainInfo Node::chain_info() {
    count_request(method::kChain);
    const ChainConfig& c = chain_.config();
    return ChainInfo{c.chain_id,  c.block_period_ms, c.block_gas_limit,        c.registry,
                     c.registrar, c.gas.transfer,    c.gas.add_certificate};
}

AccountInfo Node::account(const Address& address) {
    count_request(method::kAccount);
    AccountState a = chain_.head()->state->account(address);
    return AccountInfo{a.balance, a.nonce};
}

MetricsSnapshot Node::metrics() {
    count_request(method::kMetrics);
    MetricsSnapshot m;
    m.process_cpu_seconds = process_cpu_seconds();
    for (const auto& [name, counter] : counters_) m.requests_total[name] = counter->load(std::memory_order_relaxed);
    ChainHeadPtr head = chain_.head();
    m.txs_pending = pool_.size();
    m.chain_height = head->height();
    m.certs_total = head->state->cert_count();
    return m;
}

}  // namespace certchain
