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
#include <string>

#include <certchain/common/bytes.hpp>

namespace certchain {

// 32-byte Keccak-256 digest. Every digest in the system is one of these.
struct Hash32 {
    std::array<uint8_t, 32> bytes{};

    [[nodiscard]] std::string hex() const { return to_hex(bytes); }
    static Hash32 from_hex(std::string_view hex) { return Hash32{fixed_from_hex<32>(hex)}; }

    friend auto operator<=>(const Hash32&, const Hash32&) = default;
};

// Incremental Keccak-256 with the original multi-rate padding (0x01 domain
// byte), which is what Ethereum calls keccak256. SHA3-256 uses 0x06 instead.
class Keccak256 {
  public:
    static constexpr size_t kRate = 136;

    Keccak256& update(ByteView data);
    [[nodiscard]] Hash32 finalize();

  private:
    void absorb_block();

    std::array<uint64_t, 25> state_{};
    std::array<uint8_t, kRate> block_{};
    size_t fill_{0};
};

Hash32 keccak256(ByteView data);

}  // namespace certchain

template <>
struct std::hash<certchain::Hash32> {
    size_t operator()(const certchain::Hash32& h) const noexcept {
        size_t v = 0;
        for (size_t i = 0; i < sizeof(size_t); ++i) v = (v << 8) | h.bytes[i];
        return v;
    }
};
