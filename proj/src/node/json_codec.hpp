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

// JSON bodies shared by the HTTP server and client.

#include <json.hpp>

#include <certchain/common/amount.hpp>
#include <certchain/core/encoding.hpp>
#include <certchain/node/api.hpp>

namespace certchain::wire {

using Json = nlohmann::ordered_json;

inline Json certificate_to_json(const PublicCertificate& c) {
    return Json{{"certNo", c.cert_no}, {"name", c.name}, {"programme", c.programme}, {"convoDate", c.convo_date}};
}

inline PublicCertificate certificate_from_json(const Json& j) {
    return PublicCertificate{j.at("certNo").get<std::string>(), j.at("name").get<std::string>(),
                             j.at("programme").get<std::string>(), j.at("convoDate").get<std::string>()};
}

inline Json head_to_json(const HeadInfo& h) {
    return Json{{"height", h.height}, {"hash", h.hash.hex()}, {"stateRoot", h.state_root.hex()}};
}

inline HeadInfo head_from_json(const Json& j) {
    return HeadInfo{j.at("height").get<uint64_t>(), Hash32::from_hex(j.at("hash").get<std::string>()),
                    Hash32::from_hex(j.at("stateRoot").get<std::string>())};
}

inline Json chain_to_json(const ChainInfo& c) {
    return Json{{"chainId", c.chain_id},
                {"blockPeriodMs", c.block_period_ms},
                {"blockGasLimit", c.block_gas_limit},
                {"registry", c.registry.hex()},
                {"registrar", c.registrar.hex()},
                {"gasTransfer", c.gas_transfer},
                {"gasAddCertificate", c.gas_add_certificate}};
}

inline ChainInfo chain_from_json(const Json& j) {
    return ChainInfo{j.at("chainId").get<uint64_t>(),
                     j.at("blockPeriodMs").get<uint64_t>(),
                     j.at("blockGasLimit").get<uint64_t>(),
                     Address::from_hex(j.at("registry").get<std::string>()),
                     Address::from_hex(j.at("registrar").get<std::string>()),
                     j.at("gasTransfer").get<uint64_t>(),
                     j.at("gasAddCertificate").get<uint64_t>()};
}

// Balances exceed 64 bits, so they travel as decimal strings.
inline Json account_to_json(const AccountInfo& a) {
    return Json{{"balance", amount_to_string(a.balance)}, {"nonce", a.nonce}};
}

inline AccountInfo account_from_json(const Json& j) {
    return AccountInfo{parse_amount(j.at("balance").get<std::string>()), j.at("nonce").get<uint64_t>()};
}

inline Json metrics_to_json(const MetricsSnapshot& m) {
    Json requests = Json::object();
    for (const auto& [name, n] : m.requests_total) requests[name] = n;
    return Json{{"process_cpu_seconds", m.process_cpu_seconds},
                {"requests_total", requests},
                {"txs_pending", m.txs_pending},
                {"chain_height", m.chain_height},
                {"certs_total", m.certs_total}};
}

inline MetricsSnapshot metrics_from_json(const Json& j) {
    MetricsSnapshot m;
    m.process_cpu_seconds = j.at("process_cpu_seconds").get<double>();
    for (const auto& [name, n] : j.at("requests_total").items()) m.requests_total[name] = n.get<uint64_t>();
    m.txs_pending = j.at("txs_pending").get<uint64_t>();
    m.chain_height = j.at("chain_height").get<uint64_t>();
    m.certs_total = j.at("certs_total").get<uint64_t>();
    return m;
}

inline Json blocks_to_json(const std::vector<Block>& blocks) {
    Json list = Json::array();
    for (const Block& b : blocks) list.push_back(to_hex(encode_block(b)));
    return Json{{"blocks", std::move(list)}};
}

inline std::vector<Block> blocks_from_json(const Json& j) {
    std::vector<Block> out;
    for (const auto& hex : j.at("blocks")) out.push_back(decode_block(from_hex(hex.get<std::string>())));
    return out;
}

inline Json error_to_json(int code, const std::string& message) {
    return Json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace certchain::wire
