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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <certchain/common/amount.hpp>
#include <certchain/core/types.hpp>

namespace certchain {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GasSchedule {
    uint64_t transfer{21'000};
    // 80 * 343'838 = 27'507'040 <= 27'507'108 < 81 * 343'838
    uint64_t add_certificate{343'838};

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

struct Allocation {
    Address address;
    Amount balance{0};

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

inline const Address kDefaultRegistryAddress = Address::from_hex("0x0000000000000000000000000000000000000100");
inline const Address kTestbedFundedAddress = Address::from_hex("0x80ce17271ffa4a7f66e2cbf3561a6946587f470d");
inline constexpr Amount kOneMillionCoins = Amount{1'000'000'000'000ULL} * Amount{1'000'000'000'000ULL};

// Well-known development keys: keccak256("certchain dev registrar") and
// keccak256("certchain dev sealer"). Never use them outside local testing.
namespace dev {
    inline constexpr const char* kRegistrarKey = "0x88857b7e225c8f4879c421b83bbe147a3b9b227f079bf569102a5ee06032a228";
    inline constexpr const char* kSealerKey = "0x7ba5b76f99827614d0051cb1431fb8f2979bc64e214d72ccf1548a6f6cf09a77";
}  // namespace dev

struct ChainConfig {
    uint64_t chain_id{496};
    uint64_t block_period_ms{5000};
    uint64_t block_gas_limit{27'507'108};
    uint64_t genesis_timestamp{0};  // seconds
    std::vector<Address> authorities;
    Address registrar;
    Address registry{kDefaultRegistryAddress};
    GasSchedule gas;
    std::vector<Allocation> allocations;

    // Throws ConfigError describing the first problem found.
    void validate() const;

    [[nodiscard]] bool is_authority(const Address& a) const;

    // Authority expected to seal block `number` (strict round robin).
    [[nodiscard]] const Address& in_turn_authority(uint64_t number) const;

    friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

// Testbed parameters: chain 496, 5 s blocks, 27,507,108 gas, one million
// coins at 0x80ce...470d which is also the registrar. The authority is the
// dev sealer.
ChainConfig testbed_genesis();

// testbed_genesis() with the dev registrar key as registrar, funded with a
// further one million coins, so load tests can sign registry calls.
ChainConfig dev_genesis();

// Genesis JSON:
// {"chain_id":496,"block_period_ms":5000,"block_gas_limit":27507108,
//  "timestamp":0,"authorities":["0x.."],"registrar":"0x..",
//  "registry":"0x..","gas":{"transfer":21000,"add_certificate":343838},
//  "allocations":{"0x..":"<decimal>"}}
// registry, gas and timestamp are optional. Throws ConfigError.
ChainConfig parse_genesis(const std::string& json_text);
ChainConfig load_genesis(const std::filesystem::path& path);
std::string genesis_to_json(const ChainConfig& config);
void save_genesis(const ChainConfig& config, const std::filesystem::path& path);

// Commitment to every consensus-relevant config field; the genesis header
// carries it as parent_hash so nodes with different genesis files diverge at
// block 1.
Hash32 config_digest(const ChainConfig& config);

}  // namespace certchain
