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

#include <string>
#include <utility>
#include <variant>

namespace certchain {

// A refusal with a short machine-readable reason ("chain_id", "stale nonce", ...).
struct Rejection {
    std::string reason;
};

// Minimal value-or-rejection holder for validation paths.
template <typename T>
class [[nodiscard]] Result {
  public:
    Result(T value) : v_{std::move(value)} {}  // NOLINT(google-explicit-constructor)
    Result(Rejection r) : v_{std::move(r)} {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool ok() const { return v_.index() == 0; }
    explicit operator bool() const { return ok(); }

    T& value() & { return std::get<0>(v_); }
    const T& value() const& { return std::get<0>(v_); }
    T&& value() && { return std::get<0>(std::move(v_)); }
    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }

    [[nodiscard]] const std::string& reason() const { return std::get<1>(v_).reason; }

  private:
    std::variant<T, Rejection> v_;
};

struct Ok {};
using Status = Result<Ok>;

inline Rejection reject(std::string reason) { return Rejection{std::move(reason)}; }

}  // namespace certchain
