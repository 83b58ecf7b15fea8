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

#include <certchain/core/types.hpp>

#include <array>

namespace certchain {

namespace {

    struct FunctionInfo {
        Function function;
        std::string_view name;
        size_t arity;
        bool read_only;
    };

    constexpr std::array<FunctionInfo, 4> kFunctions{{
        {Function::kAddCertificate, "addCertificate", 7, false},
        {Function::kReadCertificatePublic, "readCertificatePublic", 1, true},
        {Function::kIsValidCertificate, "isValidCertificate", 1, true},
        {Function::kGetListCertificateStatus, "getListCertificateStatus", 0, true},
    }};

    const FunctionInfo& info(Function f) {
        for (const auto& entry : kFunctions) {
            if (entry.function == f) return entry;
        }
        throw std::invalid_argument("unknown function");
    }

}  // namespace

std::string_view function_name(Function f) { return info(f).name; }

std::optional<Function> function_from_name(std::string_view name) {
    for (const auto& entry : kFunctions) {
        if (entry.name == name) return entry.function;
    }
    return std::nullopt;
}

std::optional<Function> function_from_code(uint8_t code) {
    for (const auto& entry : kFunctions) {
        if (static_cast<uint8_t>(entry.function) == code) return entry.function;
    }
    return std::nullopt;
}

size_t expected_arity(Function f) { return info(f).arity; }

bool is_read_only(Function f) { return info(f).read_only; }

}  // namespace certchain
