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

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stop_token>

namespace certchain {

// Millisecond time source. Components take a Clock& so runs can use either
// wall time or simulated time.
class Clock {
  public:
    virtual ~Clock() = default;

    [[nodiscard]] virtual uint64_t now_ms() = 0;

    // Returns false if `stop` was requested before `deadline_ms` was reached.
    virtual bool sleep_until(uint64_t deadline_ms, std::stop_token stop) = 0;
};

// Unix epoch milliseconds.
class SystemClock final : public Clock {
  public:
    uint64_t now_ms() override;
    bool sleep_until(uint64_t deadline_ms, std::stop_token stop) override;

  private:
    std::mutex mutex_;
    std::condition_variable_any cv_;
};

// Discrete-event time. Time moves only inside sleep_until, which fires every
// scheduled task due at or before the deadline, in (time, insertion) order,
// on the sleeping thread. Single-threaded use only.
class SimulatedClock final : public Clock {
  public:
    using Task = std::function<void()>;

    explicit SimulatedClock(uint64_t start_ms = 0) : now_{start_ms} {}

    uint64_t now_ms() override { return now_; }
    bool sleep_until(uint64_t deadline_ms, std::stop_token stop) override;

    void advance(uint64_t delta_ms) { sleep_until(now_ + delta_ms, {}); }

    // Tasks scheduled in the past run at the next sleep_until.
    void schedule(uint64_t at_ms, Task task);
    [[nodiscard]] size_t pending_tasks() const { return tasks_.size(); }

  private:
    uint64_t now_;
    uint64_t sequence_{0};
    std::map<std::pair<uint64_t, uint64_t>, Task> tasks_;
};

}  // namespace certchain
