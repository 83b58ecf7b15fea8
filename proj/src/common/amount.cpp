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

#include <certchain/common/amount.hpp>

#include <algorithm>

#include <certchain/common/bytes.hpp>

namespace certchain {

Amount parse_amount(std::string_view decimal) {
    if (decimal.empty()) {
        throw DecodingError("empty amount");
    }
    constexpr Amount kMax = ~Amount{0};
    Amount v = 0;
    for (char c : decimal) {
        if (c < '0' || c > '9') {
            throw DecodingError("amount must be a decimal integer string");
        }
        auto digit = static_cast<unsigned>(c - '0');
        if (v > (kMax - digit) / 10) {
            throw DecodingError("amount overflows 128 bits");
        }
        v = v * 10 + digit;
    }
    return v;
}

std::string amount_to_string(Amount v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace certchain
