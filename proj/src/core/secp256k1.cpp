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

#include <certchain/core/secp256k1.hpp>

#include <memory>

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/obj_mac.h>
#include <openssl/rand.h>

namespace certchain {

namespace {

    struct BnDeleter {
        void operator()(BIGNUM* p) const { BN_clear_free(p); }
    };
    struct BnCtxDeleter {
        void operator()(BN_CTX* p) const { BN_CTX_free(p); }
    };
    struct PointDeleter {
        void operator()(EC_POINT* p) const { EC_POINT_free(p); }
    };
    struct GroupDeleter {
        void operator()(EC_GROUP* p) const { EC_GROUP_free(p); }
    };

    using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;
    using BnCtxPtr = std::unique_ptr<BN_CTX, BnCtxDeleter>;
    using PointPtr = std::unique_ptr<EC_POINT, PointDeleter>;
    using GroupPtr = std::unique_ptr<EC_GROUP, GroupDeleter>;

    BnPtr new_bn() {
        BnPtr bn{BN_new()};
        if (!bn) throw CryptoError("BN_new failed");
        return bn;
    }

    BnPtr bn_from(ByteView be) {
        BnPtr bn{BN_bin2bn(be.data(), static_cast<int>(be.size()), nullptr)};
        if (!bn) throw CryptoError("BN_bin2bn failed");
        return bn;
    }

    std::array<uint8_t, 32> bn_to32(const BIGNUM* bn) {
        std::array<uint8_t, 32> out{};
        if (BN_bn2binpad(bn, out.data(), 32) != 32) throw CryptoError("scalar does not fit 32 bytes");
        return out;
    }

    BnCtxPtr new_ctx() {
        BnCtxPtr ctx{BN_CTX_new()};
        if (!ctx) throw CryptoError("BN_CTX_new failed");
        return ctx;
    }

    // Immutable after construction; OpenSSL group reads are thread-safe.
    class Curve {
      public:
        static const Curve& instance() {
            static const Curve curve;
            return curve;
        }

        [[nodiscard]] const EC_GROUP* group() const { return group_.get(); }
        [[nodiscard]] const BIGNUM* order() const { return order_.get(); }
        [[nodiscard]] const BIGNUM* half_order() const { return half_order_.get(); }

        PointPtr new_point() const {
            PointPtr p{EC_POINT_new(group())};
            if (!p) throw CryptoError("EC_POINT_new failed");
            return p;
        }

        std::array<uint8_t, 64> encode(const EC_POINT* point, BN_CTX* ctx) const {
            std::array<uint8_t, 65> raw{};
            if (EC_POINT_point2oct(group(), point, POINT_CONVERSION_UNCOMPRESSED, raw.data(), raw.size(), ctx) !=
                raw.size()) {
                throw CryptoError("point encoding failed");
            }
            std::array<uint8_t, 64> xy{};
            std::copy(raw.begin() + 1, raw.end(), xy.begin());
            return xy;
        }

      private:
        Curve() {
            group_.reset(EC_GROUP_new_by_curve_name(NID_secp256k1));
            if (!group_) throw CryptoError("secp256k1 unavailable in OpenSSL");
            order_ = new_bn();
            if (EC_GROUP_get_order(group_.get(), order_.get(), nullptr) != 1) throw CryptoError("no group order");
            half_order_ = new_bn();
            if (BN_rshift1(half_order_.get(), order_.get()) != 1) throw CryptoError("BN_rshift1 failed");
        }

        GroupPtr group_;
        BnPtr order_;
        BnPtr half_order_;
    };

    bool scalar_in_range(const BIGNUM* k, const Curve& curve) {
        return !BN_is_zero(k) && !BN_is_negative(k) && BN_cmp(k, curve.order()) < 0;
    }

    using Mac = std::array<uint8_t, 32>;

    Mac hmac_sha256(const Mac& key, std::initializer_list<ByteView> parts) {
        Bytes msg;
        for (ByteView p : parts) msg.insert(msg.end(), p.begin(), p.end());
        Mac out{};
        unsigned int len = 0;
        if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(), out.data(), &len) ==
                nullptr ||
            len != out.size()) {
            throw CryptoError("HMAC-SHA256 failed");
        }
        return out;
    }

    // RFC 6979 section 3.2 nonce generator for qlen = hlen = 256.
    class NonceGenerator {
      public:
        NonceGenerator(const std::array<uint8_t, 32>& secret, const std::array<uint8_t, 32>& digest_mod_n) {
            v_.fill(0x01);
            k_.fill(0x00);
            const uint8_t zero = 0x00;
            const uint8_t one = 0x01;
            k_ = hmac_sha256(k_, {v_, ByteView{&zero, 1}, secret, digest_mod_n});
            v_ = hmac_sha256(k_, {v_});
            k_ = hmac_sha256(k_, {v_, ByteView{&one, 1}, secret, digest_mod_n});
            v_ = hmac_sha256(k_, {v_});
        }

        Mac next() {
            if (!first_) {
                const uint8_t zero = 0x00;
                k_ = hmac_sha256(k_, {v_, ByteView{&zero, 1}});
                v_ = hmac_sha256(k_, {v_});
            }
            first_ = false;
            v_ = hmac_sha256(k_, {v_});
            return v_;
        }

      private:
        Mac k_{};
        Mac v_{};
        bool first_{true};
    };

}  // namespace

PublicKey PublicKey::from_bytes(ByteView encoded) {
    std::array<uint8_t, 65> raw{};
    raw[0] = 0x04;
    if (encoded.size() == 65 && encoded[0] == 0x04) {
        std::copy(encoded.begin(), encoded.end(), raw.begin());
    } else if (encoded.size() == 64) {
        std::copy(encoded.begin(), encoded.end(), raw.begin() + 1);
    } else {
        throw CryptoError("public key must be 64 bytes or 65 bytes with 0x04 prefix");
    }
    const Curve& curve = Curve::instance();
    auto ctx = new_ctx();
    PointPtr point = curve.new_point();
    if (EC_POINT_oct2point(curve.group(), point.get(), raw.data(), raw.size(), ctx.get()) != 1 ||
        EC_POINT_is_on_curve(curve.group(), point.get(), ctx.get()) != 1) {
        throw CryptoError("point is not on secp256k1");
    }
    PublicKey key;
    std::copy(raw.begin() + 1, raw.end(), key.xy_.begin());
    return key;
}

KeyPair KeyPair::from_private_key(ByteView scalar) {
    if (scalar.size() != 32) throw CryptoError("private key must be 32 bytes");
    const Curve& curve = Curve::instance();
    BnPtr d = bn_from(scalar);
    if (!scalar_in_range(d.get(), curve)) throw CryptoError("private key outside [1, n-1]");

    auto ctx = new_ctx();
    PointPtr pub = curve.new_point();
    if (EC_POINT_mul(curve.group(), pub.get(), d.get(), nullptr, nullptr, ctx.get()) != 1) {
        throw CryptoError("public key derivation failed");
    }
    KeyPair kp;
    std::copy(scalar.begin(), scalar.end(), kp.secret_.begin());
    kp.public_ = PublicKey::from_bytes(curve.encode(pub.get(), ctx.get()));
    kp.address_ = derive_address(kp.public_);
    return kp;
}

KeyPair KeyPair::generate() {
    const Curve& curve = Curve::instance();
    std::array<uint8_t, 32> buf{};
    for (;;) {
        if (RAND_bytes(buf.data(), static_cast<int>(buf.size())) != 1) throw CryptoError("RAND_bytes failed");
        BnPtr d = bn_from(buf);
        if (scalar_in_range(d.get(), curve)) return from_private_key(buf);
    }
}

Signature KeyPair::sign_digest(const Hash32& digest) const {
    const Curve& curve = Curve::instance();
    auto ctx = new_ctx();
    const BIGNUM* n = curve.order();

    BnPtr z = bn_from(digest.bytes);
    if (BN_nnmod(z.get(), z.get(), n, ctx.get()) != 1) throw CryptoError("BN_nnmod failed");
    BnPtr d = bn_from(secret_);

    NonceGenerator nonces{secret_, bn_to32(z.get())};
    for (;;) {
        BnPtr k = bn_from(nonces.next());
        if (!scalar_in_range(k.get(), curve)) continue;

        PointPtr big_r = curve.new_point();
        if (EC_POINT_mul(curve.group(), big_r.get(), k.get(), nullptr, nullptr, ctx.get()) != 1) {
            throw CryptoError("nonce point multiplication failed");
        }
        BnPtr rx = new_bn();
        BnPtr ry = new_bn();
        if (EC_POINT_get_affine_coordinates(curve.group(), big_r.get(), rx.get(), ry.get(), ctx.get()) != 1) {
            throw CryptoError("affine conversion failed");
        }
        // R.x >= n would need recovery ids 2/3, which the wire format does not carry.
        if (BN_cmp(rx.get(), n) >= 0) continue;

        BnPtr s = new_bn();
        BnPtr tmp = new_bn();
        BnPtr k_inv{BN_mod_inverse(nullptr, k.get(), n, ctx.get())};
        if (!k_inv || BN_mod_mul(tmp.get(), rx.get(), d.get(), n, ctx.get()) != 1 ||
            BN_mod_add(tmp.get(), tmp.get(), z.get(), n, ctx.get()) != 1 ||
            BN_mod_mul(s.get(), k_inv.get(), tmp.get(), n, ctx.get()) != 1) {
            throw CryptoError("signature arithmetic failed");
        }
        if (BN_is_zero(s.get()) || BN_is_zero(rx.get())) continue;

        uint8_t recid = BN_is_odd(ry.get()) ? 1 : 0;
        if (BN_cmp(s.get(), curve.half_order()) > 0) {
            if (BN_sub(s.get(), n, s.get()) != 1) throw CryptoError("BN_sub failed");
            recid ^= 1;
        }
        return Signature{bn_to32(rx.get()), bn_to32(s.get()), recid};
    }
}

Address derive_address(const PublicKey& key) {
    Hash32 h = keccak256(key.xy());
    Address a;
    std::copy(h.bytes.begin() + 12, h.bytes.end(), a.bytes.begin());
    return a;
}

bool is_low_s(const Signature& sig) {
    BnPtr s = bn_from(sig.s);
    return BN_cmp(s.get(), Curve::instance().half_order()) <= 0;
}

Signature malleate(const Signature& sig) {
    const Curve& curve = Curve::instance();
    BnPtr s = bn_from(sig.s);
    BnPtr flipped = new_bn();
    if (BN_sub(flipped.get(), curve.order(), s.get()) != 1) throw CryptoError("BN_sub failed");
    return Signature{sig.r, bn_to32(flipped.get()), static_cast<uint8_t>(sig.recovery_id ^ 1)};
}

Result<PublicKey> recover_public_key(const Hash32& digest, const Signature& sig) {
    const Curve& curve = Curve::instance();
    const BIGNUM* n = curve.order();
    if (sig.recovery_id > 1) return reject("invalid signature");

    BnPtr r = bn_from(sig.r);
    BnPtr s = bn_from(sig.s);
    if (!scalar_in_range(r.get(), curve) || !scalar_in_range(s.get(), curve)) return reject("invalid signature");
    if (BN_cmp(s.get(), curve.half_order()) > 0) return reject("high-s");

    auto ctx = new_ctx();
    PointPtr big_r = curve.new_point();
    if (EC_POINT_set_compressed_coordinates(curve.group(), big_r.get(), r.get(), sig.recovery_id, ctx.get()) != 1) {
        return reject("unrecoverable point");
    }

    // Q = r^-1 (s R - z G) = (-z r^-1) G + (s r^-1) R
    BnPtr z = bn_from(digest.bytes);
    BnPtr r_inv{BN_mod_inverse(nullptr, r.get(), n, ctx.get())};
    BnPtr u1 = new_bn();
    BnPtr u2 = new_bn();
    if (!r_inv || BN_nnmod(z.get(), z.get(), n, ctx.get()) != 1 ||
        (!BN_is_zero(z.get()) && BN_sub(z.get(), n, z.get()) != 1) ||
        BN_mod_mul(u1.get(), z.get(), r_inv.get(), n, ctx.get()) != 1 ||
        BN_mod_mul(u2.get(), s.get(), r_inv.get(), n, ctx.get()) != 1) {
        throw CryptoError("recovery arithmetic failed");
    }
    PointPtr q = curve.new_point();
    if (EC_POINT_mul(curve.group(), q.get(), u1.get(), big_r.get(), u2.get(), ctx.get()) != 1) {
        throw CryptoError("recovery multiplication failed");
    }
    if (EC_POINT_is_at_infinity(curve.group(), q.get()) == 1) return reject("unrecoverable point");

    return PublicKey::from_bytes(curve.encode(q.get(), ctx.get()));
}

}  // namespace certchain
