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

#include <certchain/sealer/block_log.hpp>

#include <fstream>
#include <iterator>

#include <unistd.h>

#include <certchain/core/encoding.hpp>
#include <certchain/core/keccak.hpp>

namespace certchain {

namespace {

    constexpr size_t kChecksumSize = 8;

    Bytes checksum(ByteView record) {
        Hash32 h = keccak256(record);
        return Bytes(h.bytes.begin(), h.bytes.begin() + kChecksumSize);
    }

    uint32_t load_u32(const uint8_t* p) {
        return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) | (uint32_t{p[2]} << 8) | uint32_t{p[3]};
    }

}  // namespace

BlockLog::BlockLog(std::filesystem::path path) : path_{std::move(path)} {
    Bytes data;
    if (std::filesystem::exists(path_)) {
        std::ifstream in{path_, std::ios::binary};
        data.assign(std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{});
    }

    size_t offset = 0;
    while (data.size() - offset >= 4) {
        uint32_t len = load_u32(data.data() + offset);
        if (data.size() - offset - 4 < size_t{len} + kChecksumSize) break;
        ByteView record{data.data() + offset + 4, len};
        ByteView stored{data.data() + offset + 4 + len, kChecksumSize};
        Bytes expected = checksum(record);
        if (!std::equal(stored.begin(), stored.end(), expected.begin())) {
            throw BlockLogError{"block log: checksum mismatch at offset " + std::to_string(offset)};
        }
        try {
            recovered_.push_back(decode_block(record));
        } catch (const DecodingError& e) {
            throw BlockLogError{"block log: undecodable record at offset " + std::to_string(offset) + ": " + e.what()};
        }
        offset += 4 + len + kChecksumSize;
    }
    if (offset != data.size()) std::filesystem::resize_file(path_, offset);

    file_ = std::fopen(path_.c_str(), "ab");
    if (file_ == nullptr) throw BlockLogError{"block log: cannot open " + path_.string()};
}

BlockLog::~BlockLog() {
    if (file_ != nullptr) std::fclose(file_);
}

void BlockLog::append(const Block& block) {
    Bytes encoded = encode_block(block);
    Writer w;
    w.u32(static_cast<uint32_t>(encoded.size()));
    w.raw(encoded);
    w.raw(checksum(encoded));
    Bytes record = std::move(w).take();

    std::lock_guard lock{mutex_};
    if (std::fwrite(record.data(), 1, record.size(), file_) != record.size() || std::fflush(file_) != 0) {
        throw BlockLogError{"block log: write failed for " + path_.string()};
    }
    ::fsync(::fileno(file_));
}

}  // namespace certchain
