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

// Random registry workloads plus an independent reference model of the
// certificate contract, used by the property tests and the acceptance suite.

#include <map>
#include <random>
#include <string>
#include <vector>

#include <certchain/core/encoding.hpp>
#include <certchain/core/signing.hpp>
#include <certchain/state/config.hpp>

namespace certchain::testing {

// Signing is the expensive step; workloads draw from a small palette, so the
// same (signer, nonce, payload) recurs across trials.
class SigningCache {
  public:
    const SignedTransaction& sign(const Transaction& tx, const KeyPair& key) {
        Writer w;
        detail::write_transaction(w, tx);
        Bytes enc = std::move(w).take();
        auto it = cache_.find(enc);
        if (it != cache_.end()) return it->second;
        Hash32 digest = keccak256(enc);
        return cache_.emplace(std::move(enc), SignedTransaction{tx, key.sign_digest(digest)}).first->second;
    }

  private:
    std::map<Bytes, SignedTransaction> cache_;
};

struct Actors {
    KeyPair registrar = KeyPair::from_hex(dev::kRegistrarKey);
    KeyPair intruder = KeyPair::from_hex("0x00000000000000000000000000000000000000000000000000000000000000aa");
    KeyPair pauper = KeyPair::from_hex("0x00000000000000000000000000000000000000000000000000000000000000bb");
    KeyPair sealer = KeyPair::from_hex(dev::kSealerKey);

    // dev genesis plus one million coins for the intruder; the pauper is unfunded.
    [[nodiscard]] ChainConfig config() const {
        ChainConfig cfg = dev_genesis();
        cfg.allocations.push_back({intruder.address(), kOneMillionCoins});
        return cfg;
    }
};

inline constexpr uint64_t kGasPrice = 1'000'000'000;

inline Transaction add_tx(const ChainConfig& cfg, const Address& from, uint64_t nonce, std::vector<std::string> args) {
    Transaction tx;
    tx.chain_id = cfg.chain_id;
    tx.nonce = nonce;
    tx.from = from;
    tx.to = cfg.registry;
    tx.gas_limit = cfg.gas.add_certificate;
    tx.gas_price = kGasPrice;
    tx.payload = CallPayload{Function::kAddCertificate, std::move(args)};
    return tx;
}

inline std::vector<std::string> cert_args(const std::string& cert_no, const std::string& student_id = "S-1") {
    return {cert_no, "Name " + cert_no, "900101-14-0001", student_id, "Comp Sci", "2024-10-01", "2024/1"};
}

// Random mix of registrar adds (with duplicates and empty studentIds),
// intruder adds, transfers, unfunded senders, wrong chain ids and stale
// nonces. Nonces are tracked optimistically: a rejected tx does not consume
// one, so the generator only advances a nonce for txs it expects to pass
// validation.
inline std::vector<SignedTransaction> random_workload(std::mt19937_64& rng, const Actors& actors,
                                                      const ChainConfig& cfg, SigningCache& signer, size_t count) {
    std::vector<SignedTransaction> out;
    std::map<Address, uint64_t> nonces;
    for (size_t i = 0; i < count; ++i) {
        uint64_t roll = rng() % 100;
        if (roll < 60) {
            std::string cert_no = "C0" + std::to_string(rng() % 10);
            std::string sid = (rng() % 10 == 0) ? "" : "S-" + std::to_string(rng() % 2);
            const Address& from = actors.registrar.address();
            out.push_back(signer.sign(add_tx(cfg, from, nonces[from]++, cert_args(cert_no, sid)), actors.registrar));
        } else if (roll < 80) {
            std::string cert_no = "C0" + std::to_string(rng() % 10);
            const Address& from = actors.intruder.address();
            out.push_back(signer.sign(add_tx(cfg, from, nonces[from]++, cert_args(cert_no)), actors.intruder));
        } else if (roll < 88) {
            const Address& from = actors.registrar.address();
            Transaction tx;
            tx.chain_id = cfg.chain_id;
            tx.nonce = nonces[from]++;
            tx.from = from;
            tx.to = actors.pauper.address();
            tx.value = 1 + rng() % 1000;
            tx.gas_limit = cfg.gas.transfer;
            tx.gas_price = kGasPrice;
            out.push_back(signer.sign(tx, actors.registrar));
        } else if (roll < 92) {
            // unfunded sender: rejected unless an earlier transfer paid enough (it never does)
            const Address& from = actors.pauper.address();
            out.push_back(signer.sign(add_tx(cfg, from, nonces[from], cert_args("C00")), actors.pauper));
        } else if (roll < 96) {
            const Address& from = actors.registrar.address();
            Transaction tx = add_tx(cfg, from, nonces[from], cert_args("C0" + std::to_string(rng() % 10)));
            tx.chain_id = cfg.chain_id - 1;
            out.push_back(signer.sign(tx, actors.registrar));
        } else {
            const Address& from = actors.registrar.address();
            if (nonces[from] == 0) continue;
            out.push_back(signer.sign(add_tx(cfg, from, nonces[from] - 1, cert_args("C01")), actors.registrar));
        }
    }
    return out;
}

// Naive model of the certificate contract: a flat map and a counter.
struct RegistryModel {
    Address registrar;
    std::map<std::string, std::vector<std::string>> records;
    uint64_t successes{0};

    // Expected (success, reason) for an addCertificate that passed validation.
    std::pair<bool, std::string> add(const Address& caller, const std::vector<std::string>& args) {
        if (caller != registrar) return {false, "not registrar"};
        if (records.count(args[0]) != 0) return {false, "duplicate"};
        if (args[3].empty()) return {false, "empty studentId"};
        records[args[0]] = args;
        ++successes;
        return {true, ""};
    }

    // (certNo, name, programme, convoDate) or four empty strings
    [[nodiscard]] std::vector<std::string> read(const std::string& cert_no) const {
        auto it = records.find(cert_no);
        if (it == records.end()) return {"", "", "", ""};
        const auto& a = it->second;
        return {a[0], a[1], a[4], a[5]};
    }
};

}  // namespace certchain::testing
