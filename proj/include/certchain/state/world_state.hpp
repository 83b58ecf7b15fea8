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

#include <map>
#include <memory>
#include <string>

#include <certchain/common/amount.hpp>
#include <certchain/core/types.hpp>
#include <certchain/state/config.hpp>

namespace certchain {

struct AccountState {
    Amount balance{0};
    uint64_t nonce{0};  // next expected transaction nonce

    friend bool operator==(const AccountState&, const AccountState&) = default;
};

// One issued certificate. ic, student_id and semester_finish are private:
// the public read path never returns them.
struct CertificateRecord {
    std::string cert_no;
    std::string name;
    std::string ic;
    std::string student_id;
    std::string programme;
    std::string convo_date;
    std::string semester_finish;

    friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

// Records are immutable once stored, so copies of the state share them.
using CertificateMap = std::map<std::string, std::shared_ptr<const CertificateRecord>>;

// Account balances and nonces plus the certificate registry. Copying is the
// snapshot mechanism: certificate payloads are shared, not duplicated.
class WorldState {
  public:
    WorldState() = default;
    explicit WorldState(Address registrar) : registrar_{registrar} {}

    // Zero account for unknown addresses; does not create an entry.
    [[nodiscard]] AccountState account(const Address& a) const;
    AccountState& mutable_account(const Address& a) { return accounts_[a]; }
    [[nodiscard]] const std::map<Address, AccountState>& accounts() const { return accounts_; }

    [[nodiscard]] const CertificateMap& certificates() const { return certificates_; }
    [[nodiscard]] const CertificateRecord* find_certificate(const std::string& cert_no) const;
    [[nodiscard]] uint64_t cert_count() const { return cert_count_; }
    [[nodiscard]] const Address& registrar() const { return registrar_; }

    // Unconditional insert used by the registry after its checks pass.
    // Returns false if cert_no is already present.
    bool insert_certificate(CertificateRecord rec);

    [[nodiscard]] Amount total_balance() const;

    friend bool operator==(const WorldState& a, const WorldState& b);

  private:
    std::map<Address, AccountState> accounts_;
    CertificateMap certificates_;
    uint64_t cert_count_{0};
    Address registrar_;
};

// Accounts hold exactly the configured allocations. Throws ConfigError for an
// invalid config (including duplicate allocation addresses).
WorldState genesis_state(const ChainConfig& config);

// keccak256 over a canonical serialization, independent of insertion order:
//   "certchain/state/v1" | u64 n | (addr | u128 balance | u64 nonce)* sorted by address
//   | u64 m | (7 x (u32 len | bytes))* sorted by certNo bytes | u64 cert_count | registrar
Hash32 commit_state(const WorldState& state);

}  // namespace certchain
