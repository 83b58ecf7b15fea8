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

#include <doctest.h>

#include <certchain/core/signing.hpp>
#include <certchain/state/execution.hpp>
#include <certchain/state/registry.hpp>

#include "support/workload.hpp"

using namespace certchain;
using namespace certchain::testing;

// Golden roots/digests come from tests/oracles/gen_vectors.py.

TEST_CASE("testbed genesis allocates one million coins to the testbed address") {
    ChainConfig cfg = testbed_genesis();
    CHECK(cfg.chain_id == 496);
    CHECK(cfg.block_period_ms == 5000);
    CHECK(cfg.block_gas_limit == 27'507'108);
    WorldState s = genesis_state(cfg);
    CHECK(amount_to_string(s.account(kTestbedFundedAddress).balance) == "1000000000000000000000000");
    CHECK(s.cert_count() == 0);
    CHECK(get_list_certificate_status(s) == 0);
    CHECK(s.accounts().size() == 1);
}

TEST_CASE("genesis with no allocations has zero balances") {
    ChainConfig cfg = testbed_genesis();
    cfg.allocations.clear();
    WorldState s = genesis_state(cfg);
    CHECK(s.accounts().empty());
    CHECK(s.account(kTestbedFundedAddress).balance == 0);
}

TEST_CASE("genesis rejects duplicate allocations and incomplete configs") {
    ChainConfig cfg = testbed_genesis();
    cfg.allocations.push_back({kTestbedFundedAddress, 1});
    CHECK_THROWS_AS(genesis_state(cfg), ConfigError);

    ChainConfig no_auth = testbed_genesis();
    no_auth.authorities.clear();
    CHECK_THROWS_AS(genesis_state(no_auth), ConfigError);

    ChainConfig no_registrar = testbed_genesis();
    no_registrar.registrar = Address{};
    CHECK_THROWS_AS(genesis_state(no_registrar), ConfigError);
}

TEST_CASE("genesis JSON round trip and strict parsing") {
    ChainConfig cfg = dev_genesis();
    CHECK(parse_genesis(genesis_to_json(cfg)) == cfg);

    std::string dup = R"({"chain_id":496,"block_period_ms":5000,"block_gas_limit":1,"authorities":["0x80ce17271ffa4a7f66e2cbf3561a6946587f470d"],
      "registrar":"0x80ce17271ffa4a7f66e2cbf3561a6946587f470d",
      "allocations":{"0x80ce17271ffa4a7f66e2cbf3561a6946587f470d":"1","0x80ce17271ffa4a7f66e2cbf3561a6946587f470d":"2"}})";
    CHECK_THROWS_AS(parse_genesis(dup), ConfigError);

    std::string mixed_case = R"({"chain_id":496,"block_period_ms":5000,"block_gas_limit":1,"authorities":["0x80ce17271ffa4a7f66e2cbf3561a6946587f470d"],
      "registrar":"0x80ce17271ffa4a7f66e2cbf3561a6946587f470d",
      "allocations":{"0x80ce17271ffa4a7f66e2cbf3561a6946587f470d":"1","0x80CE17271FFA4A7F66E2CBF3561A6946587F470D":"2"}})";
    CHECK_THROWS_AS(parse_genesis(mixed_case), ConfigError);

    CHECK_THROWS_AS(parse_genesis("{"), ConfigError);
    CHECK_THROWS_AS(parse_genesis(R"({"chain_id":496})"), ConfigError);
}

TEST_CASE("config digests and genesis state roots match the reference") {
    CHECK(config_digest(testbed_genesis()).hex() == "0xd0550ba674d166f0df03f49be3ee214705f4f2d4dce6c6db96aefa6f822bc195");
    CHECK(config_digest(dev_genesis()).hex() == "0xfb6f0908be0d046d6df3d6d057743972afa9d39ef113ab730632ad6141326937");
    CHECK(commit_state(genesis_state(testbed_genesis())).hex() ==
          "0x94f9a0442ea3b7621afb1abf4e1d92118715ae9a98e1810f5e8d2f7411cf584c");
    CHECK(commit_state(genesis_state(dev_genesis())).hex() ==
          "0xaad392cd6d529d61edae45e5c889ccc1f043e00a8970b5eb9c50eee4bf1bf0f4");
}

TEST_CASE("gas schedule fits exactly 80 certificate writes per block") {
    GasSchedule g;
    ChainConfig cfg = testbed_genesis();
    uint64_t add = gas_cost(CallPayload{Function::kAddCertificate, {}}, g);
    CHECK(add == 343'838);
    CHECK(cfg.block_gas_limit / add == 80);
    CHECK(80 * add <= cfg.block_gas_limit);
    CHECK(81 * add > cfg.block_gas_limit);
    CHECK(gas_cost(std::nullopt, g) == 21'000);
    CHECK(gas_cost(CallPayload{Function::kGetListCertificateStatus, {}}, g) == 0);
    CHECK(gas_cost(CallPayload{Function::kReadCertificatePublic, {"x"}}, g) == 0);
}

TEST_CASE("apply_transaction: registry semantics") {
    Actors actors;
    ChainConfig cfg = actors.config();
    WorldState s = genesis_state(cfg);
    const Address reg = actors.registrar.address();

    SUBCASE("happy path, then duplicate") {
        auto r1 = apply_transaction(s, sign_transaction(add_tx(cfg, reg, 0, cert_args("C001")), actors.registrar), cfg);
        REQUIRE(r1.ok());
        CHECK(r1->success());
        CHECK(r1->gas_used == 343'838);
        CHECK(r1->return_value == Bytes{0x01});
        CHECK(s.cert_count() == 1);
        CHECK(is_valid_certificate(s, "C001"));

        Hash32 before_certs = commit_state(s);
        auto certs_before = s.certificates().size();
        auto r2 = apply_transaction(s, sign_transaction(add_tx(cfg, reg, 1, cert_args("C001", "S-2")), actors.registrar),
                                    cfg);
        REQUIRE(r2.ok());
        CHECK_FALSE(r2->success());
        CHECK(r2->error_reason == "duplicate");
        CHECK(r2->gas_used == 343'838);
        CHECK(s.cert_count() == 1);
        CHECK(s.certificates().size() == certs_before);
        CHECK(s.find_certificate("C001")->student_id == "S-1");
        CHECK(is_valid_certificate(s, "C001"));
        CHECK(commit_state(s) != before_certs);  // nonce and fee moved
        CHECK(s.account(reg).nonce == 2);
    }

    SUBCASE("non-registrar caller reverts") {
        const Address intruder = actors.intruder.address();
        Amount bal = s.account(intruder).balance;
        auto r = apply_transaction(s, sign_transaction(add_tx(cfg, intruder, 0, cert_args("C001")), actors.intruder),
                                   cfg);
        REQUIRE(r.ok());
        CHECK_FALSE(r->success());
        CHECK(r->error_reason == "not registrar");
        CHECK(s.cert_count() == 0);
        CHECK(s.certificates().empty());
        CHECK(s.account(intruder).nonce == 1);
        CHECK(s.account(intruder).balance == bal - Amount{343'838} * kGasPrice);
    }

    SUBCASE("empty studentId reverts") {
        auto r = apply_transaction(s, sign_transaction(add_tx(cfg, reg, 0, cert_args("C001", "")), actors.registrar),
                                   cfg);
        REQUIRE(r.ok());
        CHECK(r->error_reason == "empty studentId");
        CHECK_FALSE(is_valid_certificate(s, "C001"));
    }

    SUBCASE("wrong arity reverts") {
        Transaction tx = add_tx(cfg, reg, 0, {"C001", "Alice"});
        SignedTransaction stx{tx, actors.registrar.sign_digest(signing_digest(tx))};
        auto r = apply_transaction(s, stx, cfg);
        REQUIRE(r.ok());
        CHECK(r->error_reason == "arity");
        CHECK(s.cert_count() == 0);
    }

    SUBCASE("call to a non-registry address reverts") {
        Transaction tx = add_tx(cfg, reg, 0, cert_args("C001"));
        tx.to = actors.intruder.address();
        auto r = apply_transaction(s, sign_transaction(tx, actors.registrar), cfg);
        REQUIRE(r.ok());
        CHECK(r->error_reason == "no contract");
    }

    SUBCASE("one successful add matches the reference state root") {
        ChainConfig dev = dev_genesis();
        WorldState d = genesis_state(dev);
        Transaction tx = add_tx(dev, reg, 0, {"C001", "Alice", "990101-14-1234", "S1001", "Comp Sci", "2024-10-01", "2024/1"});
        REQUIRE(apply_transaction(d, sign_transaction(tx, actors.registrar), dev).ok());
        CHECK(commit_state(d).hex() == "0x839851945811dc1fa0165cd79b0a5fdd29421afe472ce54c333c57ca96353dc3");
    }
}

TEST_CASE("apply_transaction: validity conditions reject without touching state") {
    Actors actors;
    ChainConfig cfg = actors.config();
    WorldState s = genesis_state(cfg);
    const Address reg = actors.registrar.address();
    Hash32 root = commit_state(s);

    auto expect_reject = [&](const SignedTransaction& stx, const std::string& reason) {
        auto r = apply_transaction(s, stx, cfg);
        REQUIRE_FALSE(r.ok());
        CHECK(r.reason() == reason);
        CHECK(commit_state(s) == root);
    };

    SUBCASE("unfunded sender") {
        expect_reject(sign_transaction(add_tx(cfg, actors.pauper.address(), 0, cert_args("C001")), actors.pauper),
                      "insufficient funds");
        CHECK(s.account(actors.pauper.address()).nonce == 0);
    }
    SUBCASE("chain id 495 on chain 496") {
        Transaction tx = add_tx(cfg, reg, 0, cert_args("C001"));
        tx.chain_id = 495;
        expect_reject(sign_transaction(tx, actors.registrar), "chain_id");
    }
    SUBCASE("stale and gapped nonces") {
        REQUIRE(apply_transaction(s, sign_transaction(add_tx(cfg, reg, 0, cert_args("C001")), actors.registrar), cfg)
                    .ok());
        root = commit_state(s);
        expect_reject(sign_transaction(add_tx(cfg, reg, 0, cert_args("C002")), actors.registrar), "stale nonce");
        expect_reject(sign_transaction(add_tx(cfg, reg, 5, cert_args("C002")), actors.registrar), "nonce gap");
    }
    SUBCASE("gas limit below intrinsic cost") {
        Transaction tx = add_tx(cfg, reg, 0, cert_args("C001"));
        tx.gas_limit = 343'837;
        expect_reject(sign_transaction(tx, actors.registrar), "intrinsic gas");
    }
    SUBCASE("read-only calls never execute on chain") {
        Transaction tx = add_tx(cfg, reg, 0, {});
        tx.payload = CallPayload{Function::kGetListCertificateStatus, {}};
        expect_reject(sign_transaction(tx, actors.registrar), "read-only call");
    }
    SUBCASE("forged sender") {
        Transaction tx = add_tx(cfg, reg, 0, cert_args("C001"));
        SignedTransaction stx{tx, actors.intruder.sign_digest(signing_digest(tx))};
        expect_reject(stx, "signature: signer is not tx.from");
    }
    SUBCASE("high-s") {
        SignedTransaction stx = sign_transaction(add_tx(cfg, reg, 0, cert_args("C001")), actors.registrar);
        stx.signature = malleate(stx.signature);
        expect_reject(stx, "signature: high-s");
    }
    SUBCASE("fee plus value overflow") {
        Transaction tx = add_tx(cfg, reg, 0, cert_args("C001"));
        tx.value = ~Amount{0};
        expect_reject(sign_transaction(tx, actors.registrar), "insufficient funds");
    }
}

TEST_CASE("plain transfer moves value and burns the fee") {
    Actors actors;
    ChainConfig cfg = actors.config();
    WorldState s = genesis_state(cfg);
    Amount total = s.total_balance();
    Transaction tx;
    tx.chain_id = cfg.chain_id;
    tx.from = actors.registrar.address();
    tx.to = actors.pauper.address();
    tx.value = 12345;
    tx.gas_limit = 21'000;
    tx.gas_price = kGasPrice;
    auto r = apply_transaction(s, sign_transaction(tx, actors.registrar), cfg);
    REQUIRE(r.ok());
    CHECK(r->gas_used == 21'000);
    CHECK(s.account(actors.pauper.address()).balance == 12345);
    CHECK(s.total_balance() + r->fee(kGasPrice) == total);
}

TEST_CASE("add_certificate / read path") {
    WorldState s{Address::from_hex("0x00000000000000000000000000000000000000aa")};
    const Address reg = s.registrar();
    CHECK_FALSE(is_valid_certificate(s, "C001"));
    CHECK(read_certificate_public(s, "C001") == PublicCertificate{});

    CertificateRecord rec{"C001", "Alice", "990101-14-1234", "S1001", "Comp Sci", "2024-10-01", "2024/1"};
    CHECK(add_certificate(s, reg, rec));
    CHECK(is_valid_certificate(s, "C001"));
    PublicCertificate pub = read_certificate_public(s, "C001");
    CHECK(pub == PublicCertificate{"C001", "Alice", "Comp Sci", "2024-10-01"});
    for (const std::string& field : {pub.cert_no, pub.name, pub.programme, pub.convo_date}) {
        CHECK(field.find("990101-14-1234") == std::string::npos);
        CHECK(field.find("S1001") == std::string::npos);
        CHECK(field.find("2024/1") == std::string::npos);
    }

    CHECK_FALSE(add_certificate(s, reg, rec));
    CHECK_FALSE(add_certificate(s, Address{}, CertificateRecord{"C002", "B", "", "S2", "", "", ""}));
    CHECK_FALSE(add_certificate(s, reg, CertificateRecord{"C003", "C", "", "", "", "", ""}));
    CHECK(read_certificate_public(s, "C003") == PublicCertificate{});
    CHECK(get_list_certificate_status(s) == 1);
}

TEST_CASE("ten thousand distinct adds") {
    WorldState s{Address::from_hex("0x00000000000000000000000000000000000000aa")};
    for (int i = 0; i < 10'000; ++i) {
        REQUIRE(add_certificate(s, s.registrar(), CertificateRecord{"IPTM-" + std::to_string(i), "n", "ic", "sid", "p", "d", "f"}));
    }
    CHECK(get_list_certificate_status(s) == 10'000);
    CHECK(s.certificates().size() == 10'000);
}

TEST_CASE("counter counts only successful adds") {
    // 3 adds of which 1 duplicate -> 2
    Actors actors;
    ChainConfig cfg = actors.config();
    WorldState s = genesis_state(cfg);
    const Address reg = actors.registrar.address();
    std::vector<Receipt> log;
    for (auto [nonce, cert] : {std::pair{0, "A"}, {1, "B"}, {2, "A"}}) {
        auto r = apply_transaction(s, sign_transaction(add_tx(cfg, reg, nonce, cert_args(cert)), actors.registrar), cfg);
        REQUIRE(r.ok());
        log.push_back(r.value());
    }
    uint64_t replayed = 0;
    for (const Receipt& r : log) replayed += r.success() ? 1 : 0;
    CHECK(replayed == 2);
    CHECK(get_list_certificate_status(s) == 2);
}

TEST_CASE("state root ignores insertion order and sees every balance") {
    Address reg = Address::from_hex("0x00000000000000000000000000000000000000aa");
    WorldState a{reg};
    WorldState b{reg};
    std::vector<std::string> ids{"Z9", "A1", "m5", "\xc3\xa9t\xc3\xa9", "B2"};
    for (const auto& id : ids) add_certificate(a, reg, CertificateRecord{id, "n", "i", "s", "p", "c", "f"});
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) add_certificate(b, reg, CertificateRecord{*it, "n", "i", "s", "p", "c", "f"});
    CHECK(commit_state(a) == commit_state(b));
    CHECK(a == b);

    b.mutable_account(reg).balance = 1;
    CHECK(commit_state(a) != commit_state(b));
}

TEST_CASE("random workloads agree with the reference model") {
    Actors actors;
    ChainConfig cfg = actors.config();
    SigningCache signer;
    std::mt19937_64 rng{2024};
    Amount genesis_total = genesis_state(cfg).total_balance();

    for (int trial = 0; trial < 50; ++trial) {
        WorldState s = genesis_state(cfg);
        RegistryModel model{actors.registrar.address(), {}, 0};
        Amount fees = 0;
        std::map<std::string, PublicCertificate> first_seen;

        for (const SignedTransaction& stx : random_workload(rng, actors, cfg, signer, 100)) {
            Hash32 before = commit_state(s);
            auto r = apply_transaction(s, stx, cfg);
            if (!r) {
                CHECK(commit_state(s) == before);
                continue;
            }
            fees += r->fee(stx.tx.gas_price);
            if (stx.tx.payload) {
                auto [ok, reason] = model.add(stx.tx.from, stx.tx.payload->args);
                CHECK(r->success() == ok);
                CHECK(r->error_reason == reason);
            }
            // conservation after every transaction
            CHECK(s.total_balance() + fees == genesis_total);
            // immutability of anything already readable
            for (const auto& [cert_no, pub] : first_seen) CHECK(read_certificate_public(s, cert_no) == pub);
            for (const auto& [cert_no, rec] : s.certificates()) first_seen.try_emplace(cert_no, read_certificate_public(s, cert_no));
        }
        CHECK(s.cert_count() == model.successes);
        for (int i = 0; i < 10; ++i) {
            std::string cert_no = "C0" + std::to_string(i);
            PublicCertificate pub = read_certificate_public(s, cert_no);
            CHECK(std::vector<std::string>{pub.cert_no, pub.name, pub.programme, pub.convo_date} == model.read(cert_no));
        }
    }
}
