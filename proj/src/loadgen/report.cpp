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

#include <certchain/loadgen/report.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace certchain::loadgen {

namespace {

    template <typename T>
    T parse_field(const std::string& text, size_t line_no) {
        T value{};
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size()) {
            throw LoadError{"report line " + std::to_string(line_no) + ": bad field '" + text + "'"};
        }
        return value;
    }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void write_report(const std::optional<WriteReport>& write, const ReadReport& read, std::ostream& out) {
    if (write) {
        out << "# write submitted=" << write->submitted << "\n";
        out << "# write submit_duration_s=" << format_double(write->submit_duration_s) << "\n";
        out << "# write confirm_duration_s=" << format_double(write->confirm_duration_s) << "\n";
        out << "# write blocks_used=" << write->blocks_used << "\n";
        out << "# write write_tps=" << format_double(write->write_tps) << "\n";
        out << "# write txs_per_block=";
        bool first = true;
        for (const auto& [height, n] : write->txs_per_block) {
            out << (first ? "" : " ") << height << ":" << n;
            first = false;
        }
        out << "\n";
    }
    out << kReportHeader << "\n";
    for (const ReadRow& r : read.rows) {
        out << r.threads << ',' << format_double(r.duration_s) << ',' << format_double(r.client_cpu_pct) << ','
            << format_double(r.server_cpu_pct) << ',' << format_double(r.avg_tx_latency_s) << ','
            << format_double(r.read_tps) << "\n";
    }
}

void emit_report(const std::optional<WriteReport>& write, const ReadReport& read, const std::filesystem::path& path) {
    std::ofstream out{path, std::ios::trunc};
    if (!out) throw LoadError{"cannot write " + path.string()};
    write_report(write, read, out);
    if (!out.flush()) throw LoadError{"write failed for " + path.string()};
}

ReadReport parse_report(std::istream& in) {
    ReadReport report;
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kReportHeader) throw LoadError{"report line " + std::to_string(line_no) + ": unexpected header"};
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream row{line};
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw LoadError{"report line " + std::to_string(line_no) + ": expected 6 fields"};
        report.rows.push_back(ReadRow{parse_field<uint64_t>(fields[0], line_no), parse_field<double>(fields[1], line_no),
                                      parse_field<double>(fields[2], line_no), parse_field<double>(fields[3], line_no),
                                      parse_field<double>(fields[4], line_no), parse_field<double>(fields[5], line_no)});
    }
    if (!header_seen) throw LoadError{"report has no header"};
    return report;
}

}  // namespace certchain::loadgen
