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

#include <certchain/core/signing.hpp>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include <certchain/core/encoding.hpp>

namespace certchain {

namespace {

    // Successful recoveries keyed by (digest, signature). A transaction is
    // checked at admission, at block assembly and again at block import; the
    // EC work only needs to happen once per process.
    class SenderCache {
      public:
        static constexpr size_t kCapacity = 1 << 18;

        std::optional<Address> get(const Hash32& key) {
            std::lock_guard lock{mutex_};
            auto it = map_.find(key);
            if (it == map_.end()) return std::nullopt;
            return it->second;
        }

        void put(const Hash32& key, const Address& who) {
            std::lock_guard lock{mutex_};
            if (map_.size() >= kCapacity) map_.clear();
            map_.emplace(key, who);
        }

      private:
        std::mutex mutex_;
        std::unordered_map<Hash32, Address> map_;
    };

    SenderCache& sender_cache() {
        static SenderCache cache;
        return cache;
    }

    Hash32 cache_key(const Hash32& digest, const Signature& sig) {
        Keccak256 h;
        h.update(digest.bytes).update(sig.r).update(sig.s);
        h.update(ByteView{&sig.recovery_id, 1});
        return h.finalize();
    }

}  // namespace

Hash32 signing_digest(const Transaction& tx) {
    Writer w;
    detail::write_transaction(w, tx);
    return keccak256(w.bytes());
}

SignedTransaction sign_transaction(const Transaction& tx, const KeyPair& key) {
    if (key.address() != tx.from) {
        throw std::invalid_argument("signing key " + key.address().hex() + " does not match tx.from " +
                                    tx.from.hex());
    }
    Hash32 digest = keccak256(encode_transaction(tx));
    return SignedTransaction{tx, key.sign_digest(digest)};
}

Result<Address> recover_signer(const SignedTransaction& stx) {
    Hash32 digest = signing_digest(stx.tx);
    Hash32 key = cache_key(digest, stx.signature);
    if (auto hit = sender_cache().get(key)) return *hit;

    auto pub = recover_public_key(digest, stx.signature);
    if (!pub) return reject(pub.reason());
    Address who = derive_address(pub.value());
    sender_cache().put(key, who);
    return who;
}

Hash32 transaction_hash(const SignedTransaction& stx) { return keccak256(encode_signed_transaction(stx)); }

Hash32 compute_tx_root(std::span<const SignedTransaction> txs) {
    Keccak256 hasher;
    for (const SignedTransaction& stx : txs) hasher.update(transaction_hash(stx).bytes);
    return hasher.finalize();
}

Hash32 hash_block_header(const BlockHeader& header) { return keccak256(encode_header(header)); }

}  // namespace certchain
