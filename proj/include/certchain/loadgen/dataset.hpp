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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <certchain/state/world_state.hpp>

namespace certchain::loadgen {

class LoadError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CertificateDataset {
    uint64_t seed{0};
    std::vector<CertificateRecord> records;
};

// Deterministic dummy certificates. certNo is "CERT-" + zero-padded
// sequence + "-" + a four-hex-digit suffix derived from the seed; the other
// six fields come from fixed pools indexed by a seeded mt19937_64.
// Throws std::invalid_argument if n == 0.
CertificateDataset generate_dataset(size_t n, uint64_t seed);

// One JSON object per line, keys certNo, name, ic, studentId, programme,
// convoDate, semesterFinish in that order.
std::string dataset_to_jsonl(const std::vector<CertificateRecord>& records);
std::vector<CertificateRecord> dataset_from_jsonl(const std::string& text);

// Throw LoadError on I/O or format problems.
void write_dataset(const std::vector<CertificateRecord>& records, const std::filesystem::path& path);
std::vector<CertificateRecord> load_dataset(const std::filesystem::path& path);

}  // namespace certchain::loadgen
