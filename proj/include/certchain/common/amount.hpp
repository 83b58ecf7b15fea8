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
#include <string_view>

namespace certchain {

// Balances, values and fees in the smallest currency unit. 10^24 (one million
// whole coins at 18 decimals) fits with plenty of headroom.
using Amount = unsigned __int128;

// Throws DecodingError on empty input, non-digits or overflow.
Amount parse_amount(std::string_view decimal);

std::string amount_to_string(Amount v);

}  // namespace certchain
