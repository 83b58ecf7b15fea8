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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <certchain/common/bytes.hpp>
#include <certchain/common/result.hpp>
#include <certchain/core/keccak.hpp>

namespace certchain {

class CryptoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// 20-byte account identifier: trailing 20 bytes of keccak256(x || y).
struct Address {
    std::array<uint8_t, 20> bytes{};

    [[nodiscard]] std::string hex() const { return to_hex(bytes); }
    static Address from_hex(std::string_view hex) { return Address{fixed_from_hex<20>(hex)}; }
    [[nodiscard]] bool is_zero() const { return *this == Address{}; }

    friend auto operator<=>(const Address&, const Address&) = default;
};

// Compact recoverable ECDSA signature. recovery_id is 0 or 1 (y parity of R).
struct Signature {
    std::array<uint8_t, 32> r{};
    std::array<uint8_t, 32> s{};
    uint8_t recovery_id{0};

    friend bool operator==(const Signature&, const Signature&) = default;
};

// Affine point, stored as the 64-byte x || y big-endian encoding.
class PublicKey {
  public:
    // Accepts 64 bytes (x || y) or 65 bytes with the 0x04 prefix. Throws
    // CryptoError if the point is not on secp256k1.
    static PublicKey from_bytes(ByteView encoded);

    [[nodiscard]] const std::array<uint8_t, 64>& xy() const { return xy_; }

    friend bool operator==(const PublicKey&, const PublicKey&) = default;

  private:
    std::array<uint8_t, 64> xy_{};
};

class KeyPair {
  public:
    // Throws CryptoError unless 1 <= scalar <= n-1.
    static KeyPair from_private_key(ByteView scalar);
    static KeyPair from_hex(std::string_view hex) { return from_private_key(certchain::from_hex(hex)); }
    static KeyPair generate();

    [[nodiscard]] const std::array<uint8_t, 32>& private_key() const { return secret_; }
    [[nodiscard]] const PublicKey& public_key() const { return public_; }
    [[nodiscard]] const Address& address() const { return address_; }

    // Deterministic (RFC 6979, HMAC-SHA256) low-s signature over a 32-byte digest.
    [[nodiscard]] Signature sign_digest(const Hash32& digest) const;

  private:
    KeyPair() = default;

    std::array<uint8_t, 32> secret_{};
    PublicKey public_;
    Address address_;
};

Address derive_address(const PublicKey& key);

// Fails with "high-s", "invalid signature" or "unrecoverable point".
Result<PublicKey> recover_public_key(const Hash32& digest, const Signature& sig);

// True iff s <= n/2.
bool is_low_s(const Signature& sig);

// The same signature with s replaced by n - s and the parity flipped.
Signature malleate(const Signature& sig);

}  // namespace certchain
