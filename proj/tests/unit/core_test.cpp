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

#include <random>
#include <set>

#include <doctest.h>
#include <openssl/evp.h>

#include <certchain/common/amount.hpp>
#include <certchain/core/encoding.hpp>
#include <certchain/core/keccak.hpp>
#include <certchain/core/secp256k1.hpp>
#include <certchain/core/signing.hpp>

using namespace certchain;

// Golden values below were produced by tests/oracles/gen_vectors.py
// (pycryptodome + libsecp256k1 via coincurve), independent of this tree.

namespace {

Bytes sha3_256(ByteView data) {
    Bytes out(32);
    unsigned int len = 0;
    REQUIRE(EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha3_256(), nullptr) == 1);
    return out;
}

const KeyPair& registrar_key() {
    static const KeyPair k =
        KeyPair::from_hex("0x88857b7e225c8f4879c421b83bbe147a3b9b227f079bf569102a5ee06032a228");
    return k;
}

Transaction sample_add(uint64_t nonce = 7) {
    Transaction tx;
    tx.chain_id = 496;
    tx.nonce = nonce;
    tx.from = registrar_key().address();
    tx.to = Address::from_hex("0x0000000000000000000000000000000000000100");
    tx.gas_limit = 343838;
    tx.gas_price = 1000000000;
    tx.payload = CallPayload{Function::kAddCertificate,
                             {"C001", "Alice", "990101-14-1234", "S1001", "Comp Sci", "2024-10-01", "2024/1"}};
    return tx;
}

Transaction random_tx(std::mt19937_64& rng) {
    auto rand_addr = [&] {
        Address a;
        for (auto& b : a.bytes) b = static_cast<uint8_t>(rng());
        return a;
    };
    Transaction tx;
    tx.chain_id = rng() % 1000;
    tx.nonce = rng();
    tx.from = rand_addr();
    tx.to = rand_addr();
    tx.value = (Amount{rng()} << 64) | rng();
    tx.gas_limit = rng();
    tx.gas_price = rng();
    switch (rng() % 3) {
        case 0:
            break;
        case 1:
            tx.payload = CallPayload{Function::kReadCertificatePublic, {std::to_string(rng())}};
            break;
        default: {
            CallPayload p{Function::kAddCertificate, {}};
            for (int i = 0; i < 7; ++i) p.args.push_back(std::string(rng() % 12, static_cast<char>('a' + i)));
            tx.payload = p;
        }
    }
    return tx;
}

}  // namespace

TEST_CASE("keccak256 reference vectors") {
    CHECK(keccak256({}).hex() == "0xc5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
    CHECK(keccak256(as_bytes("abc")).hex() == "0x4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
    // spans several 136-byte blocks
    std::string thousand(1000, 'a');
    CHECK(keccak256(as_bytes(thousand)).hex() ==
          "0xb6a4ac1f51884d71f30fa397a5e155de3099e11fc0edef5d08b646e621e19de9");
}

TEST_CASE("keccak256 differs from SHA3-256 on non-empty input") {
    CHECK(to_hex(sha3_256(as_bytes("abc"))) == "0x3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
    std::mt19937_64 rng{7};
    for (int i = 0; i < 200; ++i) {
        Bytes data(1 + rng() % 400);
        for (auto& b : data) b = static_cast<uint8_t>(rng());
        CHECK(to_hex(keccak256(data).bytes) != to_hex(sha3_256(data)));
    }
}

TEST_CASE("keccak256 incremental update matches one-shot at every split") {
    std::string msg(300, '\0');
    for (size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<char>(i * 31);
    Hash32 whole = keccak256(as_bytes(msg));
    CHECK(keccak256(as_bytes(msg)) == whole);
    for (size_t split : {0, 1, 135, 136, 137, 272, 299}) {
        Keccak256 h;
        h.update(as_bytes(std::string_view{msg}.substr(0, split)));
        h.update(as_bytes(std::string_view{msg}.substr(split)));
        CHECK(h.finalize() == whole);
    }
}

TEST_CASE("address derivation golden vectors") {
    struct Vec {
        const char* priv;
        const char* address;
    };
    for (auto v : {
             Vec{"0x0000000000000000000000000000000000000000000000000000000000000001",
                 "0x7e5f4552091a69125d5dfcb7b8c2659029395bdf"},
             Vec{"0x0000000000000000000000000000000000000000000000000000000000000002",
                 "0x2b5ad5c4795c026514f8317c7a215e218dccd6cf"},
             Vec{"0x4c0883a69102937d6231471b5dbb6204fe5129617082792ae468d01a3f362318",
                 "0x2c7536e3605d9c16a7a3d7b1898e529396a65c23"},
             Vec{"0x88857b7e225c8f4879c421b83bbe147a3b9b227f079bf569102a5ee06032a228",
                 "0xf76fbe85a81aad1ea507c67b77836f2aba91a9db"},
             Vec{"0x7ba5b76f99827614d0051cb1431fb8f2979bc64e214d72ccf1548a6f6cf09a77",
                 "0xab6d614de04862438c85552490589bc3266dcdf6"},
         }) {
        KeyPair k = KeyPair::from_hex(v.priv);
        CHECK(k.address().hex() == v.address);
        CHECK(derive_address(k.public_key()) == derive_address(k.public_key()));
    }
}

TEST_CASE("key validation") {
    Bytes zero(32, 0);
    CHECK_THROWS_AS(KeyPair::from_private_key(zero), CryptoError);
    // the group order itself
    CHECK_THROWS_AS(KeyPair::from_hex("0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141"), CryptoError);
    CHECK_NOTHROW(KeyPair::from_hex("0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364140"));
    CHECK_THROWS_AS(KeyPair::from_private_key(Bytes(31, 1)), CryptoError);

    Bytes off_curve(64, 0);
    off_curve[63] = 5;
    CHECK_THROWS_AS(PublicKey::from_bytes(off_curve), CryptoError);
}

TEST_CASE("random keys derive distinct addresses") {
    std::set<Address> seen;
    for (int i = 0; i < 50; ++i) seen.insert(KeyPair::generate().address());
    CHECK(seen.size() == 50);
}

TEST_CASE("canonical transaction encoding is bit-exact") {
    Transaction tx = sample_add();
    CHECK(to_hex(encode_transaction(tx)) ==
          "0x00000000000001f00000000000000007f76fbe85a81aad1ea507c67b77836f2aba91a9db00000000000000000000000000"
          "00000000000100000000000000000000000000000000000000000000053f1e000000003b9aca0001010007000000044330303100"
          "000005416c6963650000000e3939303130312d31342d3132333400000005533130303100000008436f6d70205363690000000a"
          "323032342d31302d303100000006323032342f31");

    Transaction transfer = tx;
    transfer.payload.reset();
    transfer.nonce = 0;
    transfer.value = 5;
    transfer.gas_limit = 21000;
    transfer.to = Address::from_hex("0x7e5f4552091a69125d5dfcb7b8c2659029395bdf");
    CHECK(to_hex(encode_transaction(transfer)) ==
          "0x00000000000001f00000000000000000f76fbe85a81aad1ea507c67b77836f2aba91a9db7e5f4552091a69125d5dfcb7b8c2"
          "659029395bdf000000000000000000000000000000050000000000005208000000003b9aca0000");
}

TEST_CASE("encoding rejects arity violations") {
    Transaction tx = sample_add();
    tx.payload->args.pop_back();
    CHECK_THROWS_AS(encode_transaction(tx), EncodingError);
    tx.payload = CallPayload{Function::kGetListCertificateStatus, {"x"}};
    CHECK_THROWS_AS(encode_transaction(tx), EncodingError);
    tx.payload = CallPayload{Function::kGetListCertificateStatus, {}};
    CHECK_NOTHROW(encode_transaction(tx));
}

TEST_CASE("encoding round trips and is injective on single-field changes") {
    std::mt19937_64 rng{42};
    for (int i = 0; i < 300; ++i) {
        Transaction tx = random_tx(rng);
        Bytes enc = encode_transaction(tx);
        CHECK(enc == encode_transaction(tx));
        CHECK(decode_transaction(enc) == tx);

        Transaction other = tx;
        switch (rng() % 8) {
            case 0: other.chain_id ^= 1; break;
            case 1: other.nonce += 1; break;
            case 2: other.from.bytes[rng() % 20] ^= 0x10; break;
            case 3: other.to.bytes[rng() % 20] ^= 0x01; break;
            case 4: other.value += 1; break;
            case 5: other.gas_limit ^= 4; break;
            case 6: other.gas_price += 3; break;
            default:
                if (other.payload) {
                    other.payload->args[0] += "x";
                } else {
                    other.payload = CallPayload{Function::kGetListCertificateStatus, {}};
                }
        }
        CHECK(encode_transaction(other) != enc);
    }
}

TEST_CASE("string boundaries are part of the encoding") {
    Transaction a = sample_add();
    Transaction b = a;
    a.payload->args[0] = "AB";
    a.payload->args[1] = "C";
    b.payload->args[0] = "A";
    b.payload->args[1] = "BC";
    CHECK(encode_transaction(a) != encode_transaction(b));
}

TEST_CASE("decoding rejects malformed input") {
    Bytes enc = encode_transaction(sample_add());
    CHECK_THROWS_AS(decode_transaction(ByteView{enc}.first(enc.size() - 1)), DecodingError);
    Bytes extra = enc;
    extra.push_back(0);
    CHECK_THROWS_AS(decode_transaction(extra), DecodingError);
    Bytes bad_tag = enc;
    bad_tag[88] = 7;
    CHECK_THROWS_AS(decode_transaction(bad_tag), DecodingError);
    Bytes bad_fn = enc;
    bad_fn[89] = 9;
    CHECK_THROWS_AS(decode_transaction(bad_fn), DecodingError);
    CHECK_THROWS_AS(from_hex("0xabc"), DecodingError);
    CHECK_THROWS_AS(from_hex("0xzz"), DecodingError);
}

TEST_CASE("signature golden vector matches libsecp256k1") {
    SignedTransaction stx = sign_transaction(sample_add(), registrar_key());
    CHECK(signing_digest(stx.tx).hex() == "0x8f116bcf20518f62a21dbd4b1ac3087d6e5b2e740ef33c8491abc7de491409aa");
    CHECK(to_hex(stx.signature.r) == "0x66baafcf6bf81b8e809bd71956859a14606577c6070e928c37b08311f415d630");
    CHECK(to_hex(stx.signature.s) == "0x21a5bd5eff27050e7994bc0bd1d5ab08559fc29eacb9a5057481dce5396f22a6");
    CHECK(stx.signature.recovery_id == 1);
    CHECK(transaction_hash(stx).hex() == "0x31ae32bbb79adffb0d1823828ff3ea6b6598ec2b60cc9f94c48d11c9ff88cc86");
}

TEST_CASE("sign/recover round trip over random keys and transactions") {
    std::mt19937_64 rng{3};
    for (int i = 0; i < 40; ++i) {
        KeyPair k = KeyPair::generate();
        Transaction tx = random_tx(rng);
        tx.from = k.address();
        SignedTransaction stx = sign_transaction(tx, k);
        CHECK(is_low_s(stx.signature));
        auto who = recover_signer(stx);
        REQUIRE(who.ok());
        CHECK(who.value() == k.address());
    }
}

TEST_CASE("sign_transaction refuses a key that is not tx.from") {
    KeyPair a = KeyPair::generate();
    KeyPair b = KeyPair::generate();
    Transaction tx = sample_add();
    tx.from = b.address();
    CHECK_THROWS_AS(sign_transaction(tx, a), std::invalid_argument);
}

TEST_CASE("tampering breaks the signature binding") {
    SignedTransaction stx = sign_transaction(sample_add(), registrar_key());
    Bytes enc = encode_signed_transaction(stx);
    // Flip a byte inside the certNo argument.
    enc[97] ^= 0x01;
    SignedTransaction tampered = decode_signed_transaction(enc);
    auto who = recover_signer(tampered);
    CHECK((!who.ok() || who.value() != registrar_key().address()));
}

TEST_CASE("high-s signatures are rejected") {
    SignedTransaction stx = sign_transaction(sample_add(), registrar_key());
    SignedTransaction high = stx;
    high.signature = malleate(stx.signature);
    CHECK_FALSE(is_low_s(high.signature));
    auto who = recover_signer(high);
    REQUIRE_FALSE(who.ok());
    CHECK(who.reason() == "high-s");
}

TEST_CASE("signatures over another chain id still recover") {
    // Replay protection lives in validation; recovery itself is chain-agnostic.
    Transaction tx = sample_add();
    tx.chain_id = 495;
    SignedTransaction stx = sign_transaction(tx, registrar_key());
    auto who = recover_signer(stx);
    REQUIRE(who.ok());
    CHECK(who.value() == registrar_key().address());
}

TEST_CASE("malformed signatures are rejected") {
    SignedTransaction stx = sign_transaction(sample_add(), registrar_key());
    SignedTransaction zero_r = stx;
    zero_r.signature.r.fill(0);
    CHECK_FALSE(recover_signer(zero_r).ok());
    SignedTransaction bad_v = stx;
    bad_v.signature.recovery_id = 2;
    CHECK_FALSE(recover_signer(bad_v).ok());
}

TEST_CASE("header hashing") {
    BlockHeader h;
    h.number = 3;
    h.timestamp = 15;
    h.gas_limit = 27507108;
    Hash32 a = hash_block_header(h);
    CHECK(a == hash_block_header(h));
    BlockHeader later = h;
    later.timestamp = 16;
    CHECK(hash_block_header(later) != a);
    CHECK(encode_header(h).size() == 148);
    CHECK(decode_header(encode_header(h)) == h);
}

TEST_CASE("block encoding round trip") {
    Block b;
    b.header.number = 1;
    b.header.gas_limit = 27507108;
    for (uint64_t n = 0; n < 3; ++n) b.transactions.push_back(sign_transaction(sample_add(n), registrar_key()));
    b.header.tx_root = compute_tx_root(b.transactions);
    b.seal = registrar_key().sign_digest(hash_block_header(b.header));
    Bytes enc = encode_block(b);
    CHECK(decode_block(enc) == b);
    enc.pop_back();
    CHECK_THROWS_AS(decode_block(enc), DecodingError);
}

TEST_CASE("amount parsing") {
    CHECK(amount_to_string(parse_amount("1000000000000000000000000")) == "1000000000000000000000000");
    CHECK(parse_amount("0") == 0);
    CHECK(amount_to_string(~Amount{0}) == "340282366920938463463374607431768211455");
    CHECK_THROWS_AS(parse_amount("340282366920938463463374607431768211456"), DecodingError);
    CHECK_THROWS_AS(parse_amount("-1"), DecodingError);
    CHECK_THROWS_AS(parse_amount(""), DecodingError);
}
