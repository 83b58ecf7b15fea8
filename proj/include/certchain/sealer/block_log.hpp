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

#include <cstdio>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <certchain/core/types.hpp>

namespace certchain {

class BlockLogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Append-only block file. Record: u32_be(len) || encoded block || first 8
// bytes of keccak256(encoded block). Genesis is never stored.
class BlockLog {
  public:
    // Opens or creates the file and reads back every complete record. A torn
    // final record (crash mid-append) is truncated away; a checksum mismatch
    // or undecodable record throws BlockLogError.
    explicit BlockLog(std::filesystem::path path);
    ~BlockLog();

    BlockLog(const BlockLog&) = delete;
    BlockLog& operator=(const BlockLog&) = delete;

    // Blocks recovered at open time, in file order.
    [[nodiscard]] const std::vector<Block>& recovered() const { return recovered_; }

    // Flushed before returning.
    void append(const Block& block);

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::FILE* file_{nullptr};
    std::mutex mutex_;
    std::vector<Block> recovered_;
};

}  // namespace certchain
