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

#include <certchain/loadgen/read_load.hpp>

#include <atomic>
#include <barrier>
#include <chrono>
#include <mutex>
#include <thread>

#include <certchain/node/node.hpp>

namespace certchain::loadgen {

namespace {

    using SteadyClock = std::chrono::steady_clock;

    double seconds_between(SteadyClock::time_point a, SteadyClock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    }

}  // namespace

ReadRow run_read_row(const std::vector<CertificateRecord>& records, const NodeFactory& connect, uint64_t threads,
                     double idle_seconds) {
    std::unique_ptr<NodeApi> monitor = connect();
    ReadRow row;
    row.threads = threads;

    if (threads == 0) {
        double server_before = monitor->metrics().process_cpu_seconds;
        double client_before = process_cpu_seconds();
        auto start = SteadyClock::now();
        std::this_thread::sleep_for(std::chrono::duration<double>(idle_seconds));
        double wall = seconds_between(start, SteadyClock::now());
        double server_after = monitor->metrics().process_cpu_seconds;
        row.client_cpu_pct = 100.0 * (process_cpu_seconds() - client_before) / wall;
        row.server_cpu_pct = 100.0 * (server_after - server_before) / wall;
        return row;
    }

    std::vector<std::unique_ptr<NodeApi>> clients;
    for (uint64_t t = 0; t < threads; ++t) clients.push_back(connect());

    std::atomic<uint64_t> completed{0};
    std::atomic<bool> abort{false};
    std::mutex error_mutex;
    std::string error;
    std::vector<double> latency_sums(threads, 0.0);
    std::barrier start_line{static_cast<std::ptrdiff_t>(threads + 1)};

    auto worker = [&](uint64_t t) {
        const size_t begin = records.size() * t / threads;
        const size_t end = records.size() * (t + 1) / threads;
        start_line.arrive_and_wait();
        try {
            for (size_t i = begin; i < end && !abort.load(std::memory_order_relaxed); ++i) {
                const CertificateRecord& r = records[i];
                auto sent = SteadyClock::now();
                PublicCertificate got = clients[t]->read_certificate(r.cert_no);
                latency_sums[t] += seconds_between(sent, SteadyClock::now());
                if (got != PublicCertificate{r.cert_no, r.name, r.programme, r.convo_date}) {
                    throw LoadError{"read mismatch for " + r.cert_no + ": got (" + got.cert_no + ", " + got.name +
                                    ", " + got.programme + ", " + got.convo_date + ")"};
                }
                completed.fetch_add(1, std::memory_order_relaxed);
            }
        } catch (const std::exception& e) {
            std::lock_guard lock{error_mutex};
            if (error.empty()) error = e.what();
            abort = true;
        }
    };

    double server_before = monitor->metrics().process_cpu_seconds;
    double client_before = process_cpu_seconds();
    std::vector<std::jthread> pool;
    for (uint64_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    auto start = SteadyClock::now();
    start_line.arrive_and_wait();
    pool.clear();
    auto finish = SteadyClock::now();
    double client_after = process_cpu_seconds();
    double server_after = monitor->metrics().process_cpu_seconds;

    if (!error.empty()) throw LoadError{error};

    double total_latency = 0;
    for (double s : latency_sums) total_latency += s;
    const auto reads = static_cast<double>(completed.load());
    row.duration_s = seconds_between(start, finish);
    row.client_cpu_pct = 100.0 * (client_after - client_before) / row.duration_s;
    row.server_cpu_pct = 100.0 * (server_after - server_before) / row.duration_s;
    row.avg_tx_latency_s = reads > 0 ? total_latency / reads : 0.0;
    row.read_tps = reads / row.duration_s;
    return row;
}

ReadReport run_read_load(const std::vector<CertificateRecord>& records, const NodeFactory& connect,
                         const ReadLoadOptions& options) {
    ReadReport report;
    for (uint64_t threads : options.thread_counts) {
        report.rows.push_back(run_read_row(records, connect, threads, options.idle_seconds));
    }
    return report;
}

}  // namespace certchain::loadgen
