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

#include <certchain/state/config.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace certchain {

using nlohmann::json;
using nlohmann::ordered_json;

void ChainConfig::validate() const {
    if (authorities.empty()) throw ConfigError("authority set is empty");
    if (registrar.is_zero()) throw ConfigError("registrar address is not set");
    if (block_period_ms == 0 || block_period_ms % 1000 != 0) {
        throw ConfigError("block_period_ms must be a positive multiple of 1000");
    }
    if (block_gas_limit == 0) throw ConfigError("block_gas_limit must be positive");
    std::set<Address> seen;
    for (const Address& a : authorities) {
        if (!seen.insert(a).second) throw ConfigError("duplicate authority " + a.hex());
    }
    seen.clear();
    Amount total = 0;
    for (const Allocation& alloc : allocations) {
        if (!seen.insert(alloc.address).second) throw ConfigError("duplicate allocation " + alloc.address.hex());
        if (total + alloc.balance < total) throw ConfigError("allocations overflow 128 bits");
        total += alloc.balance;
    }
}

bool ChainConfig::is_authority(const Address& a) const {
    return std::find(authorities.begin(), authorities.end(), a) != authorities.end();
}

const Address& ChainConfig::in_turn_authority(uint64_t number) const {
    if (authorities.empty()) throw ConfigError("authority set is empty");
    return authorities[number % authorities.size()];
}

ChainConfig testbed_genesis() {
    ChainConfig cfg;
    cfg.authorities = {KeyPair::from_hex(dev::kSealerKey).address()};
    cfg.registrar = kTestbedFundedAddress;
    cfg.allocations = {{kTestbedFundedAddress, kOneMillionCoins}};
    return cfg;
}

ChainConfig dev_genesis() {
    ChainConfig cfg = testbed_genesis();
    cfg.registrar = KeyPair::from_hex(dev::kRegistrarKey).address();
    cfg.allocations.push_back({cfg.registrar, kOneMillionCoins});
    return cfg;
}

namespace {

    Address parse_address(const json& j, const std::string& what) {
        if (!j.is_string()) throw ConfigError(what + " must be a hex string");
        try {
            return Address::from_hex(j.get<std::string>());
        } catch (const DecodingError& e) {
            throw ConfigError(what + ": " + e.what());
        }
    }

    uint64_t parse_u64(const json& j, const std::string& what) {
        if (!j.is_number_unsigned()) throw ConfigError(what + " must be a non-negative integer");
        return j.get<uint64_t>();
    }

    // nlohmann keeps the last of duplicated keys; catch them during parsing.
    json parse_strict(const std::string& text) {
        std::vector<std::set<std::string>> keys;
        std::string duplicate;
        json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
            switch (event) {
                case json::parse_event_t::object_start:
                    keys.emplace_back();
                    break;
                case json::parse_event_t::object_end:
                    keys.pop_back();
                    break;
                case json::parse_event_t::key:
                    if (!keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
                        duplicate = parsed.get<std::string>();
                    }
                    break;
                default:
                    break;
            }
            return true;
        };
        json doc;
        try {
            doc = json::parse(text, cb);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string{"genesis is not valid JSON: "} + e.what());
        }
        if (!duplicate.empty()) throw ConfigError("duplicate key in genesis: " + duplicate);
        return doc;
    }

}  // namespace

ChainConfig parse_genesis(const std::string& json_text) {
    json doc = parse_strict(json_text);
    if (!doc.is_object()) throw ConfigError("genesis must be a JSON object");

    auto required = [&](const char* key) -> const json& {
        if (!doc.contains(key)) throw ConfigError(std::string{"genesis is missing "} + key);
        return doc.at(key);
    };

    ChainConfig cfg;
    cfg.chain_id = parse_u64(required("chain_id"), "chain_id");
    cfg.block_period_ms = parse_u64(required("block_period_ms"), "block_period_ms");
    cfg.block_gas_limit = parse_u64(required("block_gas_limit"), "block_gas_limit");
    if (doc.contains("timestamp")) cfg.genesis_timestamp = parse_u64(doc["timestamp"], "timestamp");

    const json& auths = required("authorities");
    if (!auths.is_array()) throw ConfigError("authorities must be an array");
    for (const json& a : auths) cfg.authorities.push_back(parse_address(a, "authority"));

    cfg.registrar = parse_address(required("registrar"), "registrar");
    if (doc.contains("registry")) cfg.registry = parse_address(doc["registry"], "registry");
    if (doc.contains("gas")) {
        const json& gas = doc["gas"];
        if (gas.contains("transfer")) cfg.gas.transfer = parse_u64(gas["transfer"], "gas.transfer");
        if (gas.contains("add_certificate")) {
            cfg.gas.add_certificate = parse_u64(gas["add_certificate"], "gas.add_certificate");
        }
    }

    const json& allocs = required("allocations");
    if (!allocs.is_object()) throw ConfigError("allocations must be an object of address -> decimal string");
    for (const auto& [addr, balance] : allocs.items()) {
        if (!balance.is_string()) throw ConfigError("allocation balances must be decimal strings");
        Allocation a;
        a.address = parse_address(json(addr), "allocation address");
        try {
            a.balance = parse_amount(balance.get<std::string>());
        } catch (const DecodingError& e) {
            throw ConfigError("allocation " + addr + ": " + e.what());
        }
        cfg.allocations.push_back(a);
    }

    cfg.validate();
    return cfg;
}

ChainConfig load_genesis(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) throw ConfigError("cannot open genesis file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_genesis(ss.str());
}

std::string genesis_to_json(const ChainConfig& config) {
    ordered_json doc;
    doc["chain_id"] = config.chain_id;
    doc["block_period_ms"] = config.block_period_ms;
    doc["block_gas_limit"] = config.block_gas_limit;
    doc["timestamp"] = config.genesis_timestamp;
    doc["authorities"] = ordered_json::array();
    for (const Address& a : config.authorities) doc["authorities"].push_back(a.hex());
    doc["registrar"] = config.registrar.hex();
    doc["registry"] = config.registry.hex();
    doc["gas"] = {{"transfer", config.gas.transfer}, {"add_certificate", config.gas.add_certificate}};
    doc["allocations"] = ordered_json::object();
    for (const Allocation& a : config.allocations) doc["allocations"][a.address.hex()] = amount_to_string(a.balance);
    return doc.dump(2) + "\n";
}

void save_genesis(const ChainConfig& config, const std::filesystem::path& path) {
    std::ofstream out{path};
    if (!out) throw ConfigError("cannot write genesis file " + path.string());
    out << genesis_to_json(config);
}

Hash32 config_digest(const ChainConfig& config) {
    Writer w;
    w.raw(as_bytes("certchain/genesis/v1"));
    w.u64(config.chain_id);
    w.u64(config.block_period_ms);
    w.u64(config.block_gas_limit);
    w.u64(config.genesis_timestamp);
    w.u32(static_cast<uint32_t>(config.authorities.size()));
    for (const Address& a : config.authorities) w.raw(a.bytes);
    w.raw(config.registrar.bytes);
    w.raw(config.registry.bytes);
    w.u64(config.gas.transfer);
    w.u64(config.gas.add_certificate);

    std::vector<Allocation> sorted = config.allocations;
    std::sort(sorted.begin(), sorted.end(), [](const Allocation& a, const Allocation& b) {
        return a.address < b.address;
    });
    w.u32(static_cast<uint32_t>(sorted.size()));
    for (const Allocation& a : sorted) {
        w.raw(a.address.bytes);
        w.u128(a.balance);
    }
    return keccak256(w.bytes());
}

}  // namespace certchain
