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

#include <certchain/node/client.hpp>

#include <httplib.h>

#include "json_codec.hpp"

namespace certchain {

namespace {

    using wire::Json;

    // Percent-encodes everything outside the RFC 3986 unreserved set.
    std::string encode_path_segment(const std::string& s) {
        static constexpr char kHex[] = "0123456789ABCDEF";
        std::string out;
        for (unsigned char c : s) {
            if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
                out.push_back(static_cast<char>(c));
            } else {
                out.push_back('%');
                out.push_back(kHex[c >> 4]);
                out.push_back(kHex[c & 0x0f]);
            }
        }
        return out;
    }

    template <typename F>
    auto parse_body(const std::string& body, const std::string& what, F&& f) {
        try {
            return f(Json::parse(body));
        } catch (const std::exception& e) {
            throw RpcError{"malformed " + what + " response: " + e.what()};
        }
    }

}  // namespace

HttpNodeClient::HttpNodeClient(const std::string& base_url, std::chrono::milliseconds timeout)
    : base_url_{base_url}, client_{std::make_unique<httplib::Client>(base_url)} {
    if (!client_->is_valid()) throw RpcError{"invalid node url: " + base_url};
    client_->set_keep_alive(true);
    client_->set_tcp_nodelay(true);
    client_->set_connection_timeout(timeout);
    client_->set_read_timeout(timeout);
    client_->set_write_timeout(timeout);
}

HttpNodeClient::~HttpNodeClient() = default;

std::string HttpNodeClient::get(const std::string& path) {
    auto res = client_->Get(path);
    if (!res) throw RpcError{"GET " + base_url_ + path + ": " + httplib::to_string(res.error())};
    if (res->status != 200) throw RpcError{"GET " + path + ": HTTP " + std::to_string(res->status) + " " + res->body};
    return std::move(res->body);
}

Result<Hash32> HttpNodeClient::submit_transaction(const std::string& raw) {
    auto res = client_->Post("/tx", Json{{"raw", raw}}.dump(), "application/json");
    if (!res) throw RpcError{"POST " + base_url_ + "/tx: " + httplib::to_string(res.error())};
    if (res->status == 200) {
        return parse_body(res->body, "/tx", [](const Json& j) { return Hash32::from_hex(j.at("hash").get<std::string>()); });
    }
    if (res->status == 400 || res->status == 422) {
        return reject(parse_body(res->body, "/tx",
                                 [](const Json& j) { return j.at("error").at("message").get<std::string>(); }));
    }
    throw RpcError{"POST /tx: HTTP " + std::to_string(res->status) + " " + res->body};
}

PublicCertificate HttpNodeClient::read_certificate(const std::string& cert_no) {
    return parse_body(get("/cert/" + encode_path_segment(cert_no)), "/cert", wire::certificate_from_json);
}

uint64_t HttpNodeClient::certificate_count() {
    return parse_body(get("/cert-count"), "/cert-count", [](const Json& j) { return j.at("count").get<uint64_t>(); });
}

std::vector<Block> HttpNodeClient::get_blocks(uint64_t from, uint64_t max) {
    return parse_body(get("/blocks?from=" + std::to_string(from) + "&max=" + std::to_string(max)), "/blocks",
                      wire::blocks_from_json);
}

HeadInfo HttpNodeClient::head() { return parse_body(get("/head"), "/head", wire::head_from_json); }

ChainInfo HttpNodeClient::chain_info() { return parse_body(get("/chain"), "/chain", wire::chain_from_json); }

AccountInfo HttpNodeClient::account(const Address& address) {
    return parse_body(get("/account/" + address.hex()), "/account", wire::account_from_json);
}

MetricsSnapshot HttpNodeClient::metrics() { return parse_body(get("/metrics"), "/metrics", wire::metrics_from_json); }

}  // namespace certchain
