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

#include <certchain/core/encoding.hpp>

namespace certchain {

namespace {

    constexpr uint8_t kTagTransfer = 0;
    constexpr uint8_t kTagCall = 1;

    void write_signature(Writer& w, const Signature& sig) {
        w.raw(sig.r);
        w.raw(sig.s);
        w.u8(sig.recovery_id);
    }

    Signature read_signature(Reader& r) {
        Signature sig;
        sig.r = r.fixed<32>();
        sig.s = r.fixed<32>();
        sig.recovery_id = r.u8();
        return sig;
    }

    void write_header(Writer& w, const BlockHeader& h) {
        w.u64(h.number);
        w.raw(h.parent_hash.bytes);
        w.u64(h.timestamp);
        w.raw(h.sealer.bytes);
        w.u64(h.gas_limit);
        w.u64(h.gas_used);
        w.raw(h.tx_root.bytes);
        w.raw(h.state_root.bytes);
    }

    BlockHeader read_header(Reader& r) {
        BlockHeader h;
        h.number = r.u64();
        h.parent_hash.bytes = r.fixed<32>();
        h.timestamp = r.u64();
        h.sealer.bytes = r.fixed<20>();
        h.gas_limit = r.u64();
        h.gas_used = r.u64();
        h.tx_root.bytes = r.fixed<32>();
        h.state_root.bytes = r.fixed<32>();
        return h;
    }

}  // namespace

namespace detail {

    void write_transaction(Writer& w, const Transaction& tx) {
        w.u64(tx.chain_id);
        w.u64(tx.nonce);
        w.raw(tx.from.bytes);
        w.raw(tx.to.bytes);
        w.u128(tx.value);
        w.u64(tx.gas_limit);
        w.u64(tx.gas_price);
        if (!tx.payload) {
            w.u8(kTagTransfer);
            return;
        }
        w.u8(kTagCall);
        w.u8(static_cast<uint8_t>(tx.payload->function));
        if (tx.payload->args.size() > UINT16_MAX) throw EncodingError("too many call arguments");
        w.u16(static_cast<uint16_t>(tx.payload->args.size()));
        for (const std::string& arg : tx.payload->args) w.str32(arg);
    }

    Transaction read_transaction(Reader& r) {
        Transaction tx;
        tx.chain_id = r.u64();
        tx.nonce = r.u64();
        tx.from.bytes = r.fixed<20>();
        tx.to.bytes = r.fixed<20>();
        tx.value = r.u128();
        tx.gas_limit = r.u64();
        tx.gas_price = r.u64();
        uint8_t tag = r.u8();
        if (tag == kTagTransfer) return tx;
        if (tag != kTagCall) throw DecodingError("unknown payload tag");

        auto function = function_from_code(r.u8());
        if (!function) throw DecodingError("unknown function code");
        CallPayload payload{*function, {}};
        uint16_t count = r.u16();
        payload.args.reserve(count);
        for (uint16_t i = 0; i < count; ++i) payload.args.push_back(r.str32());
        tx.payload = std::move(payload);
        return tx;
    }

}  // namespace detail

Bytes encode_transaction(const Transaction& tx) {
    if (tx.payload && !tx.payload->arity_ok()) {
        throw EncodingError(std::string{function_name(tx.payload->function)} + " expects " +
                            std::to_string(expected_arity(tx.payload->function)) + " arguments, got " +
                            std::to_string(tx.payload->args.size()));
    }
    Writer w;
    detail::write_transaction(w, tx);
    return std::move(w).take();
}

Transaction decode_transaction(ByteView data) {
    Reader r{data};
    Transaction tx = detail::read_transaction(r);
    r.expect_done();
    return tx;
}

Bytes encode_signed_transaction(const SignedTransaction& stx) {
    Writer w;
    detail::write_transaction(w, stx.tx);
    write_signature(w, stx.signature);
    return std::move(w).take();
}

SignedTransaction decode_signed_transaction(ByteView data) {
    Reader r{data};
    SignedTransaction stx;
    stx.tx = detail::read_transaction(r);
    stx.signature = read_signature(r);
    r.expect_done();
    return stx;
}

Bytes encode_header(const BlockHeader& header) {
    Writer w;
    write_header(w, header);
    return std::move(w).take();
}

BlockHeader decode_header(ByteView data) {
    Reader r{data};
    BlockHeader h = read_header(r);
    r.expect_done();
    return h;
}

Bytes encode_block(const Block& block) {
    Writer w;
    write_header(w, block.header);
    if (block.transactions.size() > UINT32_MAX) throw EncodingError("too many transactions");
    w.u32(static_cast<uint32_t>(block.transactions.size()));
    for (const SignedTransaction& stx : block.transactions) {
        Bytes encoded = encode_signed_transaction(stx);
        w.u32(static_cast<uint32_t>(encoded.size()));
        w.raw(encoded);
    }
    write_signature(w, block.seal);
    return std::move(w).take();
}

Block decode_block(ByteView data) {
    Reader r{data};
    Block block;
    block.header = read_header(r);
    uint32_t count = r.u32();
    // Each record takes at least 4 + 154 bytes; bound the reserve by what is left.
    block.transactions.reserve(std::min<size_t>(count, r.remaining() / 158));
    for (uint32_t i = 0; i < count; ++i) {
        uint32_t len = r.u32();
        block.transactions.push_back(decode_signed_transaction(r.raw(len)));
    }
    block.seal = read_signature(r);
    r.expect_done();
    return block;
}

}  // namespace certchain
