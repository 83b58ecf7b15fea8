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

#include <certchain/common/bytes.hpp>

namespace certchain {

namespace {

    int hex_value(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }

}  // namespace

std::string to_hex(ByteView data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 + data.size() * 2);
    out += "0x";
    for (uint8_t b : data) {
        out += kDigits[b >> 4];
        out += kDigits[b & 0x0f];
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
        hex.remove_prefix(2);
    }
    if (hex.size() % 2 != 0) {
        throw DecodingError("odd-length hex string");
    }
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw DecodingError("invalid hex digit");
        }
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

void Writer::u16(uint16_t v) {
    u8(static_cast<uint8_t>(v >> 8));
    u8(static_cast<uint8_t>(v));
}

void Writer::u32(uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) u8(static_cast<uint8_t>(v >> shift));
}

void Writer::u64(uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) u8(static_cast<uint8_t>(v >> shift));
}

void Writer::u128(unsigned __int128 v) {
    u64(static_cast<uint64_t>(v >> 64));
    u64(static_cast<uint64_t>(v));
}

void Writer::str32(std::string_view s) {
    if (s.size() > UINT32_MAX) {
        throw std::length_error("string too long for u32 length prefix");
    }
    u32(static_cast<uint32_t>(s.size()));
    raw(as_bytes(s));
}

ByteView Reader::raw(size_t n) {
    if (remaining() < n) {
        throw DecodingError("unexpected end of input");
    }
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

uint8_t Reader::u8() { return raw(1)[0]; }

uint16_t Reader::u16() {
    ByteView b = raw(2);
    return static_cast<uint16_t>((b[0] << 8) | b[1]);
}

uint32_t Reader::u32() {
    uint32_t v = 0;
    for (uint8_t b : raw(4)) v = (v << 8) | b;
    return v;
}

uint64_t Reader::u64() {
    uint64_t v = 0;
    for (uint8_t b : raw(8)) v = (v << 8) | b;
    return v;
}

unsigned __int128 Reader::u128() {
    unsigned __int128 hi = u64();
    return (hi << 64) | u64();
}

std::string Reader::str32() {
    uint32_t len = u32();
    ByteView b = raw(len);
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

void Reader::expect_done() const {
    if (!done()) {
        throw DecodingError("trailing bytes after encoded value");
    }
}

}  // namespace certchain
