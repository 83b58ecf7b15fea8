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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace certchain {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

// Thrown for any malformed input on a decode path (hex, wire encodings, files).
class DecodingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

// Lowercase hex with a 0x prefix.
std::string to_hex(ByteView data);

// Accepts an optional 0x/0X prefix and either case. Throws DecodingError.
Bytes from_hex(std::string_view hex);

template <size_t N>
std::array<uint8_t, N> fixed_from_hex(std::string_view hex) {
    Bytes raw = from_hex(hex);
    if (raw.size() != N) {
        throw DecodingError("expected " + std::to_string(N) + " bytes, got " + std::to_string(raw.size()));
    }
    std::array<uint8_t, N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

// Appends big-endian integers and raw bytes to a growing buffer.
class Writer {
  public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    void u128(unsigned __int128 v);
    void raw(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void str32(std::string_view s);  // u32 length prefix + bytes

    [[nodiscard]] const Bytes& bytes() const& { return buf_; }
    [[nodiscard]] Bytes take() && { return std::move(buf_); }

  private:
    Bytes buf_;
};

// Cursor over an immutable buffer; every read throws DecodingError on underrun.
class Reader {
  public:
    explicit Reader(ByteView data) : data_{data} {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    uint64_t u64();
    unsigned __int128 u128();
    ByteView raw(size_t n);
    std::string str32();

    template <size_t N>
    std::array<uint8_t, N> fixed() {
        std::array<uint8_t, N> out{};
        ByteView v = raw(N);
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }

    [[nodiscard]] size_t remaining() const { return data_.size() - pos_; }
    [[nodiscard]] bool done() const { return pos_ == data_.size(); }
    void expect_done() const;

  private:
    ByteView data_;
    size_t pos_{0};
};

}  // namespace certchain
