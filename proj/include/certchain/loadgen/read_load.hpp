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
#include <functional>
#include <memory>
#include <vector>

#include <certchain/loadgen/dataset.hpp>
#include <certchain/node/api.hpp>

namespace certchain::loadgen {

struct ReadRow {
    uint64_t threads{0};
    double duration_s{0};
    double client_cpu_pct{0};  // this process, CPU time over wall time
    double server_cpu_pct{0};  // node process, from /metrics deltas
    double avg_tx_latency_s{0};
    double read_tps{0};

    friend bool operator==(const ReadRow&, const ReadRow&) = default;
};

struct ReadReport {
    std::vector<ReadRow> rows;

    friend bool operator==(const ReadReport&, const ReadReport&) = default;
};

// Each worker gets its own connection.
using NodeFactory = std::function<std::unique_ptr<NodeApi>()>;

struct ReadLoadOptions {
    std::vector<uint64_t> thread_counts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    double idle_seconds{10};  // length of the zero-thread sample
};

// T workers read disjoint contiguous slices of the dataset and check every
// answer against the record. Any mismatch throws LoadError. T = 0 issues no
// reads and samples idle CPU for idle_seconds.
ReadRow run_read_row(const std::vector<CertificateRecord>& records, const NodeFactory& connect, uint64_t threads,
                     double idle_seconds);

ReadReport run_read_load(const std::vector<CertificateRecord>& records, const NodeFactory& connect,
                         const ReadLoadOptions& options = {});

}  // namespace certchain::loadgen
