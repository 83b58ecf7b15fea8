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

#include <certchain/sealer/clock.hpp>

#include <chrono>

namespace certchain {

uint64_t SystemClock::now_ms() {
    auto since_epoch = std::chrono::system_clock::now().time_since_epoch();
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(since_epoch).count());
}

bool SystemClock::sleep_until(uint64_t deadline_ms, std::stop_token stop) {
    auto deadline = std::chrono::system_clock::time_point{std::chrono::milliseconds{deadline_ms}};
    std::unique_lock lock{mutex_};
    cv_.wait_until(lock, stop, deadline, [] { return false; });
    return !stop.stop_requested();
}

bool SimulatedClock::sleep_until(uint64_t deadline_ms, std::stop_token stop) {
    while (!tasks_.empty() && tasks_.begin()->first.first <= deadline_ms) {
        if (stop.stop_requested()) return false;
        auto node = tasks_.extract(tasks_.begin());
        if (node.key().first > now_) now_ = node.key().first;
        node.mapped()();
    }
    if (stop.stop_requested()) return false;
    if (deadline_ms > now_) now_ = deadline_ms;
    return true;
}

void SimulatedClock::schedule(uint64_t at_ms, Task task) {
    tasks_.emplace(std::pair{at_ms, sequence_++}, std::move(task));
}

}  // namespace certchain
