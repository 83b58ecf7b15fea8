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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <certchain/loadgen/read_load.hpp>
#include <certchain/loadgen/write_load.hpp>

namespace certchain::loadgen {

inline constexpr const char* kReportHeader = "threads,duration_s,client_cpu_pct,server_cpu_pct,avg_tx_latency_s,read_tps";

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// '#' comment lines with the write summary (when present), the header, then
// one row per read row.
void write_report(const std::optional<WriteReport>& write, const ReadReport& read, std::ostream& out);

// Throws LoadError if the file cannot be written.
void emit_report(const std::optional<WriteReport>& write, const ReadReport& read, const std::filesystem::path& path);

// Inverse of write_report for the read rows; comment lines are skipped.
// Throws LoadError on a malformed header or row.
ReadReport parse_report(std::istream& in);

}  // namespace certchain::loadgen
