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

// certchain-node: sealer or follower node with the HTTP API.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include <certchain/core/signing.hpp>
#include <certchain/node/client.hpp>
#include <certchain/node/follower.hpp>
#include <certchain/node/node.hpp>
#include <certchain/node/server.hpp>
#include <certchain/sealer/sealer.hpp>

using namespace certchain;

namespace {

std::pair<std::string, int> split_listen(const std::string& listen) {
    auto colon = listen.rfind(':');
    if (colon == std::string::npos) throw CLI::ValidationError{"--listen", "expected host:port"};
    return {listen.substr(0, colon), std::stoi(listen.substr(colon + 1))};
}

std::string read_key_file(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw std::runtime_error{"cannot read key file " + path};
    std::string key;
    in >> key;
    return key;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificate registry proof-of-authority node"};
    std::string genesis_path;
    std::string listen = "127.0.0.1:8545";
    std::string datadir;
    std::string sealer_key;
    std::string sealer_key_file;
    std::string peer;
    uint64_t poll_ms = 1000;
    size_t mempool_capacity = Mempool::kDefaultCapacity;
    size_t rpc_threads = 32;
    std::string write_dev_genesis;

    app.add_option("--genesis", genesis_path, "Genesis JSON file");
    app.add_option("--listen", listen, "HTTP listen address host:port")->capture_default_str();
    app.add_option("--datadir", datadir, "Directory holding the block log");
    auto* key_opt = app.add_option("--sealer-key", sealer_key, "Hex private key of this node's sealing authority");
    app.add_option("--sealer-key-file", sealer_key_file, "File containing the sealer private key")->excludes(key_opt);
    app.add_option("--peer", peer, "Base URL of a node to follow, e.g. http://10.0.0.2:8545");
    app.add_option("--poll-ms", poll_ms, "Follower poll interval")->capture_default_str();
    app.add_option("--mempool-capacity", mempool_capacity)->capture_default_str();
    app.add_option("--rpc-threads", rpc_threads, "HTTP worker threads")->capture_default_str();
    app.add_option("--write-dev-genesis", write_dev_genesis,
                   "Write the development genesis to this path and exit");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!write_dev_genesis.empty()) {
            save_genesis(dev_genesis(), write_dev_genesis);
            std::cout << "wrote " << write_dev_genesis << "\n";
            return 0;
        }
        if (genesis_path.empty()) {
            std::cerr << "--genesis is required\n";
            return 2;
        }
        if (!sealer_key_file.empty()) sealer_key = read_key_file(sealer_key_file);

        // Block termination signals before any thread starts so they reach sigwait.
        sigset_t signals;
        sigemptyset(&signals);
        sigaddset(&signals, SIGINT);
        sigaddset(&signals, SIGTERM);
        pthread_sigmask(SIG_BLOCK, &signals, nullptr);

        Node::Options options;
        options.mempool_capacity = mempool_capacity;
        if (!datadir.empty()) options.datadir = datadir;
        Node node{load_genesis(genesis_path), options};
        std::cerr << "genesis " << hash_block_header(node.chain().block(0)->header).hex() << " head " << node.head().height
                  << " " << node.head().hash.hex() << "\n";

        node.chain().add_observer([&](const Block& block, const ChainHead& head) {
            node.mempool().prune(*head.state);
            std::cerr << "block " << head.height() << " txs " << block.transactions.size() << " "
                      << head.hash.hex() << "\n";
        });

        RpcServer server{node, rpc_threads};
        auto [host, port] = split_listen(listen);
        int bound = server.start(host, port);
        std::cerr << "listening on " << host << ":" << bound << "\n";

        SystemClock clock;
        std::optional<Sealer> sealer;
        std::jthread sealer_thread;
        if (!sealer_key.empty()) {
            sealer.emplace(node.chain(), node.mempool(), KeyPair::from_hex(sealer_key));
            sealer_thread = std::jthread{[&](std::stop_token stop) {
                sealer->run(clock, stop);
                if (sealer->halt_reason()) std::cerr << "sealer halted: " << *sealer->halt_reason() << "\n";
            }};
            std::cerr << "sealing as " << KeyPair::from_hex(sealer_key).address().hex() << "\n";
        }

        std::optional<HttpNodeClient> peer_client;
        std::optional<Follower> follower;
        std::jthread follower_thread;
        if (!peer.empty()) {
            peer_client.emplace(peer);
            follower.emplace(node.chain(), *peer_client, Follower::Options{.poll_ms = poll_ms});
            follower_thread = std::jthread{[&](std::stop_token stop) {
                follower->run(clock, stop);
                if (follower->failure()) std::cerr << "sync stopped: " << *follower->failure() << "\n";
            }};
            std::cerr << "following " << peer << "\n";
        }

        int sig = 0;
        sigwait(&signals, &sig);
        std::cerr << "shutting down\n";
        sealer_thread = {};
        follower_thread = {};
        server.stop();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
