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

// loadgen: dataset generation plus write and read load against a node.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include <certchain/loadgen/report.hpp>
#include <certchain/node/client.hpp>

using namespace certchain;
using namespace certchain::loadgen;
using Json = nlohmann::ordered_json;

namespace {

// "0..11", "1,2,4,8" or a mix such as "0,2..4".
std::vector<uint64_t> parse_thread_spec(const std::string& spec) {
    std::vector<uint64_t> out;
    std::stringstream in{spec};
    std::string part;
    while (std::getline(in, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoull(part));
            continue;
        }
        uint64_t lo = std::stoull(part.substr(0, dots));
        uint64_t hi = std::stoull(part.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError{"--threads", "empty range " + part};
        for (uint64_t t = lo; t <= hi; ++t) out.push_back(t);
    }
    return out;
}

Json write_report_to_json(const WriteReport& r) {
    Json hist = Json::object();
    for (const auto& [height, n] : r.txs_per_block) hist[std::to_string(height)] = n;
    return Json{{"submitted", r.submitted},
                {"submit_duration_s", r.submit_duration_s},
                {"confirm_duration_s", r.confirm_duration_s},
                {"blocks_used", r.blocks_used},
                {"write_tps", r.write_tps},
                {"txs_per_block", hist}};
}

WriteReport write_report_from_json(const Json& j) {
    WriteReport r;
    r.submitted = j.at("submitted").get<uint64_t>();
    r.submit_duration_s = j.at("submit_duration_s").get<double>();
    r.confirm_duration_s = j.at("confirm_duration_s").get<double>();
    r.blocks_used = j.at("blocks_used").get<uint64_t>();
    r.write_tps = j.at("write_tps").get<double>();
    for (const auto& [height, n] : j.at("txs_per_block").items()) r.txs_per_block[std::stoull(height)] = n.get<uint64_t>();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificate registry load generator"};
    app.require_subcommand(1);

    size_t count = 10'000;
    uint64_t seed = 42;
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "Write a deterministic JSONL certificate dataset");
    generate->add_option("--count", count)->capture_default_str();
    generate->add_option("--seed", seed)->capture_default_str();
    generate->add_option("--out", out_path)->required();

    std::string dataset_path;
    std::string rpc = "http://127.0.0.1:8545";
    std::string key_hex;
    uint64_t gas_price = 1'000'000'000;
    std::string summary_out;
    auto* write = app.add_subcommand("write", "Submit every record as addCertificate and wait for confirmation");
    write->add_option("--dataset", dataset_path)->required();
    write->add_option("--rpc", rpc)->capture_default_str();
    write->add_option("--key", key_hex, "Registrar private key (hex)")->required();
    write->add_option("--gas-price", gas_price)->capture_default_str();
    write->add_option("--summary-out", summary_out, "Also save the write summary as JSON");

    std::string threads_spec = "0..11";
    double idle_seconds = 10;
    std::string write_summary;
    auto* read = app.add_subcommand("read", "Read every record back with T parallel clients per row");
    read->add_option("--dataset", dataset_path)->required();
    read->add_option("--rpc", rpc)->capture_default_str();
    read->add_option("--threads", threads_spec, "Thread counts, e.g. 0..11 or 1,2,4,8")->capture_default_str();
    read->add_option("--idle-seconds", idle_seconds, "Length of the zero-thread sample")->capture_default_str();
    read->add_option("--out", out_path)->required();
    read->add_option("--write-summary", write_summary, "JSON from 'write --summary-out' to include in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            CertificateDataset dataset = generate_dataset(count, seed);
            write_dataset(dataset.records, out_path);
            std::cout << "wrote " << dataset.records.size() << " records to " << out_path << "\n";
        } else if (*write) {
            auto records = load_dataset(dataset_path);
            HttpNodeClient node{rpc, std::chrono::seconds{30}};
            SystemClock clock;
            WriteReport report = run_write_load(records, node, KeyPair::from_hex(key_hex), clock,
                                                WriteLoadOptions{.gas_price = gas_price});
            Json j = write_report_to_json(report);
            std::cout << j.dump(2) << "\n";
            if (!summary_out.empty()) {
                std::ofstream f{summary_out};
                f << j.dump(2) << "\n";
            }
        } else if (*read) {
            auto records = load_dataset(dataset_path);
            std::optional<WriteReport> summary;
            if (!write_summary.empty()) {
                std::ifstream f{write_summary};
                summary = write_report_from_json(Json::parse(f));
            }
            ReadLoadOptions options{parse_thread_spec(threads_spec), idle_seconds};
            ReadReport report = run_read_load(
                records, [&] { return std::make_unique<HttpNodeClient>(rpc, std::chrono::seconds{30}); }, options);
            emit_report(summary, report, out_path);
            write_report(summary, report, std::cout);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
