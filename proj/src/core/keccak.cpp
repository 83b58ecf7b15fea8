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

#include <certchain/core/keccak.hpp>

#include <bit>
#include <cstring>

namespace certchain {

namespace {

    constexpr std::array<uint64_t, 24> kRoundConstants{
        0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
        0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
        0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
        0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
        0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
        0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
    };

    // Rotation offsets and lane permutation for the combined rho/pi step,
    // walking the 24-cycle that starts at lane 1.
    constexpr std::array<int, 24> kRho{1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                       27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
    constexpr std::array<int, 24> kPi{10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                      15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

    void keccak_f1600(std::array<uint64_t, 25>& a) {
        for (uint64_t rc : kRoundConstants) {
            // theta
            uint64_t c[5];
            for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
            for (int x = 0; x < 5; ++x) {
                uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
                for (int y = 0; y < 25; y += 5) a[y + x] ^= d;
            }
            // rho + pi
            uint64_t carry = a[1];
            for (int i = 0; i < 24; ++i) {
                int j = kPi[i];
                uint64_t tmp = a[j];
                a[j] = std::rotl(carry, kRho[i]);
                carry = tmp;
            }
            // chi
            for (int y = 0; y < 25; y += 5) {
                uint64_t row[5];
                for (int x = 0; x < 5; ++x) row[x] = a[y + x];
                for (int x = 0; x < 5; ++x) a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
            // iota
            a[0] ^= rc;
        }
    }

    uint64_t load_le64(const uint8_t* p) {
        uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
        return v;
    }

}  // namespace

void Keccak256::absorb_block() {
    for (size_t i = 0; i < kRate / 8; ++i) state_[i] ^= load_le64(block_.data() + 8 * i);
    keccak_f1600(state_);
    fill_ = 0;
}

Keccak256& Keccak256::update(ByteView data) {
    size_t pos = 0;
    while (pos < data.size()) {
        size_t take = std::min(kRate - fill_, data.size() - pos);
        std::memcpy(block_.data() + fill_, data.data() + pos, take);
        fill_ += take;
        pos += take;
        if (fill_ == kRate) absorb_block();
    }
    return *this;
}

Hash32 Keccak256::finalize() {
    std::memset(block_.data() + fill_, 0, kRate - fill_);
    block_[fill_] ^= 0x01;
    block_[kRate - 1] ^= 0x80;
    absorb_block();

    Hash32 out;
    for (size_t i = 0; i < 4; ++i) {
        uint64_t lane = state_[i];
        for (size_t b = 0; b < 8; ++b) out.bytes[8 * i + b] = static_cast<uint8_t>(lane >> (8 * b));
    }
    state_.fill(0);
    return out;
}

Hash32 keccak256(ByteView data) { return Keccak256{}.update(data).finalize(); }

}  // namespace certchain
